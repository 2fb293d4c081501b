//! Endomorphism algebras of the tableau modules and indecomposability
//! certificates.
//!
//! A module is indecomposable iff its endomorphism algebra is local, i.e. the
//! algebra modulo its Jacobson radical is one-dimensional. The radical is
//! computed with the characteristic-zero trace criterion: `x` is radical iff
//! `tr(L_{xy}) = 0` for every `y`, where `L_z` is left multiplication by `z`.

use std::collections::{BTreeSet, VecDeque};

use num_traits::Zero;
use serde::Serialize;

use crate::composition::Composition;
use crate::error::{check_limit, Result, SyrtError};
use crate::hecke::{apply_pi, build_action_with_limit, HeckeAction, PiResult};
use crate::linalg::{int, rank, Matrix, Rational, RowEchelon, SparseRow};
use crate::tableau::Syrt;

/// Default cap on `|α|` for certification.
pub const CERTIFY_LIMIT: usize = 7;

/// Default cap on the dimension of a span whose commutant is solved for.
pub const COMMUTANT_DIM_LIMIT: usize = 64;

/// All linear maps on a submodule span commuting with every generator.
#[derive(Clone, Debug)]
pub struct Commutant {
    /// Basis indices (into the action's basis) spanning the submodule.
    pub span: Vec<usize>,
    /// Basis of the commutant as matrices on `span`.
    pub basis: Vec<Matrix>,
    free: Vec<usize>,
}

impl Commutant {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a commutant element in `self.basis`.
    ///
    /// Each basis element is 1 at its own free entry and 0 at the others, so
    /// the coordinates are read off the free entries.
    pub fn coordinates(&self, m: &Matrix) -> Vec<Rational> {
        self.free.iter().map(|&f| m.flat()[f].clone()).collect()
    }

    /// Whether `m` lies in the commutant.
    pub fn contains(&self, m: &Matrix) -> bool {
        let coords = self.coordinates(m);
        let mut rebuilt = Matrix::zeros(m.dim());
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for r in 0..m.dim() {
                for col in 0..m.dim() {
                    let v = rebuilt.get(r, col) + c * b.get(r, col);
                    rebuilt.set(r, col, v);
                }
            }
        }
        rebuilt == *m
    }

    /// Gram matrix `G_{kl} = tr(L_{b_k b_l})` of the trace form.
    pub fn trace_form(&self) -> Vec<Vec<Rational>> {
        let c = self.dim();
        // structure[k][l] = coordinates of b_k b_l
        let structure: Vec<Vec<Vec<Rational>>> = self
            .basis
            .iter()
            .map(|bk| {
                self.basis
                    .iter()
                    .map(|bl| self.coordinates(&(bk * bl)))
                    .collect()
            })
            .collect();
        // tr(L_{b_p}) = Σ_m coefficient of b_m in b_p b_m
        let left_trace: Vec<Rational> = (0..c)
            .map(|p| (0..c).map(|m| structure[p][m][m].clone()).sum())
            .collect();
        (0..c)
            .map(|k| {
                (0..c)
                    .map(|l| {
                        structure[k][l]
                            .iter()
                            .zip(&left_trace)
                            .map(|(g, t)| g * t)
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    /// Basis of the Jacobson radical, in commutant coordinates.
    pub fn radical(&self) -> Vec<Vec<Rational>> {
        let gram = self.trace_form();
        let mut ech = RowEchelon::new(self.dim());
        for row in &gram {
            ech.insert(dense_to_sparse(row));
        }
        ech.nullspace()
    }

    /// Commutant element with the given coordinates.
    pub fn element(&self, coords: &[Rational]) -> Matrix {
        let d = self.span.len();
        let mut flat = vec![Rational::zero(); d * d];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (acc, v) in flat.iter_mut().zip(b.flat()) {
                *acc += c * v;
            }
        }
        Matrix::from_flat(d, flat)
    }

    pub fn report(&self) -> EndoReport {
        let gram = self.trace_form();
        let semisimple = rank(&gram);
        EndoReport {
            commutant_dim: self.dim(),
            radical_dim: self.dim() - semisimple,
            local: semisimple == 1,
            idempotent_blocks: None,
        }
    }
}

fn dense_to_sparse(row: &[Rational]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, v.clone()))
        .collect()
}

/// Solves `f π_i = π_i f` for all `i` on the span of `class` (or the whole
/// module).
pub fn commutant(action: &HeckeAction, class: Option<usize>) -> Result<Commutant> {
    commutant_with_limit(action, class, COMMUTANT_DIM_LIMIT)
}

pub fn commutant_with_limit(
    action: &HeckeAction,
    class: Option<usize>,
    limit: usize,
) -> Result<Commutant> {
    let span: Vec<usize> = match class {
        None => (0..action.dim()).collect(),
        Some(c) => action
            .classes()
            .get(c)
            .ok_or_else(|| SyrtError::Domain(format!("no class {c}")))?
            .clone(),
    };
    check_limit("commutant span", span.len(), limit)?;
    let d = span.len();
    let mut local = vec![usize::MAX; action.dim()];
    for (j, &k) in span.iter().enumerate() {
        local[k] = j;
    }
    let var = |a: usize, b: usize| a * d + b;
    let mut ech = RowEchelon::new(d * d);
    for i in 1..=action.generator_count() {
        let image: Vec<Option<usize>> = span
            .iter()
            .map(|&k| {
                action.image(i, k).map(|to| {
                    let j = local[to];
                    assert!(j != usize::MAX, "class spans are submodules");
                    j
                })
            })
            .collect();
        let mut preimages: Vec<Vec<usize>> = vec![Vec::new(); d];
        for (b, t) in image.iter().enumerate() {
            if let Some(t) = *t {
                preimages[t].push(b);
            }
        }
        for (a, pre) in preimages.iter().enumerate() {
            for (b, t) in image.iter().enumerate() {
                // (f π)_{ab} - (π f)_{ab} = f_{a, π(b)} - Σ_{π(k) = a} f_{k b}
                let mut row = SparseRow::new();
                if let Some(t) = *t {
                    *row.entry(var(a, t)).or_insert_with(Rational::zero) += int(1);
                }
                for &k in pre {
                    *row.entry(var(k, b)).or_insert_with(Rational::zero) -= int(1);
                }
                ech.insert(row);
            }
        }
    }
    let free = ech.free_columns();
    let basis = ech
        .nullspace()
        .into_iter()
        .map(|flat| Matrix::from_flat(d, flat))
        .collect();
    Ok(Commutant { span, basis, free })
}

/// Dimension counts of an endomorphism algebra.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EndoReport {
    pub commutant_dim: usize,
    pub radical_dim: usize,
    /// `commutant_dim - radical_dim == 1`.
    pub local: bool,
    /// The class partition (basis indices), present when the module splits.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idempotent_blocks: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Indecomposable,
    Decomposable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Indecomposable => "indecomposable",
            Verdict::Decomposable => "decomposable",
        })
    }
}

/// Certificate for `R_α`.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub alpha: Composition,
    pub simple: bool,
    pub classes: usize,
    /// Dimension of the `E_0` submodule.
    pub e0_dim: usize,
    pub e0: EndoReport,
    pub dim: usize,
    /// The whole module.
    pub full: EndoReport,
    /// Classes `E_1, E_2, …`; exploratory; nothing is proven about them.
    pub other_classes: Vec<EndoReport>,
    /// Locality of the full endomorphism algebra.
    pub verdict: Verdict,
}

impl Certificate {
    /// Whether the verdict and the `E_0` report agree with what is proven:
    /// `E_0` is always indecomposable, and `R_α` is indecomposable exactly
    /// when `α` is simple (equivalently, when there is a single class).
    pub fn is_consistent(&self) -> bool {
        let expect = if self.simple {
            Verdict::Indecomposable
        } else {
            Verdict::Decomposable
        };
        self.e0.local && self.verdict == expect && (self.classes == 1) == self.simple
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "alpha": self.alpha,
            "simple": self.simple,
            "classes": self.classes,
            "e0": {
                "dim": self.e0_dim,
                "commutant_dim": self.e0.commutant_dim,
                "radical_dim": self.e0.radical_dim,
                "local": self.e0.local,
            },
            "full": {
                "dim": self.dim,
                "commutant_dim": self.full.commutant_dim,
                "radical_dim": self.full.radical_dim,
                "local": self.full.local,
            },
            "verdict": self.verdict,
        })
    }
}

/// Certifies (in)decomposability of `R_α` with the default size cap.
pub fn is_indecomposable_certified(alpha: &Composition) -> Result<Certificate> {
    certify_with_limit(alpha, CERTIFY_LIMIT)
}

pub fn certify_with_limit(alpha: &Composition, limit: usize) -> Result<Certificate> {
    check_limit("certification", alpha.size(), limit)?;
    let action = build_action_with_limit(alpha, limit)?;
    certify_action(&action)
}

pub fn certify_action(action: &HeckeAction) -> Result<Certificate> {
    let alpha = action.shape().clone();
    let classes = action.classes().len();
    let e0 = commutant(action, Some(0))?.report();
    let mut full = commutant(action, None)?.report();
    if classes > 1 {
        full.idempotent_blocks = Some(action.classes().to_vec());
    }
    let other_classes = (1..classes)
        .map(|c| commutant(action, Some(c)).map(|k| k.report()))
        .collect::<Result<Vec<_>>>()?;
    let verdict = if full.local {
        Verdict::Indecomposable
    } else {
        Verdict::Decomposable
    };
    Ok(Certificate {
        simple: alpha.is_simple(),
        classes,
        e0_dim: action.classes()[0].len(),
        e0,
        dim: action.dim(),
        full,
        other_classes,
        verdict,
        alpha,
    })
}

/// The annihilating word for a tableau `T̂ ∈ E_0` other than the source.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WitnessData {
    /// Smallest entry whose cell differs between `T̂` and `T_sup`.
    pub epsilon: usize,
    /// Entry left-adjacent to `epsilon` in `T_sup`.
    pub x: usize,
    /// `[x, x+1, …, ε-1]`, applied right to left.
    pub sequence: Vec<usize>,
    /// `π_x ⋯ π_{ε-1}(T̂)`.
    pub image: Syrt,
}

/// Computes `ε`, `x`, and the word `π_x π_{x+1} ⋯ π_{ε-1}`, then checks that
/// it kills `T_sup` while acting by a swap at every step on `T̂`.
pub fn witness_sequence(alpha: &Composition, t_hat: &Syrt) -> Result<WitnessData> {
    if t_hat.shape() != alpha {
        return Err(SyrtError::Domain(format!(
            "tableau has shape {}, expected {alpha}",
            t_hat.shape()
        )));
    }
    let sup = alpha.t_sup();
    if *t_hat == sup {
        return Err(SyrtError::Domain("T̂ equals T_sup".into()));
    }
    if !t_hat.columns_increasing() {
        return Err(SyrtError::Domain("T̂ is not in E_0".into()));
    }
    let (des_hat, des_sup) = (t_hat.descent_set(), sup.descent_set());
    if !des_hat.is_subset(&des_sup) {
        return Err(SyrtError::Domain(format!(
            "Des(T̂) = {des_hat:?} is not contained in Des(T_sup) = {des_sup:?}"
        )));
    }
    let (pos_hat, pos_sup) = (t_hat.positions(), sup.positions());
    let epsilon = (1..=alpha.size())
        .find(|&e| pos_hat[e] != pos_sup[e])
        .expect("distinct tableaux differ somewhere");
    let at = pos_sup[epsilon];
    if at.col == 1 {
        return Err(SyrtError::Internal(format!(
            "ε = {epsilon} lies in the first column of T_sup"
        )));
    }
    let x = sup
        .entry(crate::composition::Cell::new(at.col - 1, at.row))
        .expect("left neighbour exists");
    if x >= epsilon {
        return Err(SyrtError::Internal(format!("x = {x} is not below ε = {epsilon}")));
    }
    let sequence: Vec<usize> = (x..epsilon).collect();

    if crate::hecke::apply_word(&sequence, &sup)?.is_some() {
        return Err(SyrtError::Internal("the witness word does not kill T_sup".into()));
    }
    let mut image = t_hat.clone();
    for &i in sequence.iter().rev() {
        match apply_pi(i, &image)? {
            PiResult::Swapped(s) => image = s,
            other => {
                return Err(SyrtError::Internal(format!(
                    "π_{i} acts on T̂ by {other:?}, not by a swap"
                )))
            }
        }
    }
    Ok(WitnessData {
        epsilon,
        x,
        sequence,
        image,
    })
}

/// Tableaux `T̂ ∈ E_0`, `T̂ ≠ T_sup`, with `Des(T̂) ⊆ Des(T_sup)`.
pub fn witness_candidates(action: &HeckeAction) -> Vec<Syrt> {
    let sup = action.shape().t_sup();
    let des_sup = sup.descent_set();
    action.classes()[0]
        .iter()
        .map(|&k| &action.basis()[k])
        .filter(|t| **t != sup && t.descent_set().is_subset(&des_sup))
        .cloned()
        .collect()
}

/// Generators labelling some move on some path from `from` to `to` in the
/// move graph.
pub fn generators_on_paths(action: &HeckeAction, from: usize, to: usize) -> BTreeSet<usize> {
    let edges = action.swap_edges();
    let reach = |start: usize, forward: bool| {
        let mut seen = vec![false; action.dim()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            for &(a, b, _) in &edges {
                let (src, dst) = if forward { (a, b) } else { (b, a) };
                if src == k && !seen[dst] {
                    seen[dst] = true;
                    queue.push_back(dst);
                }
            }
        }
        seen
    };
    let fwd = reach(from, true);
    let back = reach(to, false);
    edges
        .into_iter()
        .filter(|&(a, b, _)| fwd[a] && back[b])
        .map(|(_, _, i)| i)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::build_action;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn syrt(shape: &str, rows: &[&[usize]]) -> Syrt {
        Syrt::from_rows(comp(shape), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// Rank of the span of all matrices with entries in {-1, 0, 1} that commute
    /// with every generator on the span `span`.
    fn brute_commutant_dim(action: &HeckeAction, span: &[usize]) -> usize {
        let d = span.len();
        let gens: Vec<Matrix> = (1..=action.generator_count())
            .map(|i| {
                let full = action.matrix(i);
                let rows: Vec<Vec<i64>> = span
                    .iter()
                    .map(|&r| span.iter().map(|&c| full[r][c]).collect())
                    .collect();
                Matrix::from_integers(&rows)
            })
            .collect();
        let mut found = Vec::new();
        let total = 3usize.pow((d * d) as u32);
        for code in 0..total {
            let mut c = code;
            let vals: Vec<i64> = (0..d * d)
                .map(|_| {
                    let v = (c % 3) as i64 - 1;
                    c /= 3;
                    v
                })
                .collect();
            let m = Matrix::from_flat(d, vals.into_iter().map(int).collect());
            if gens.iter().all(|g| &m * g == g * &m) {
                found.push(m.flat().to_vec());
            }
        }
        rank(&found)
    }

    #[test]
    fn identity_always_commutes() {
        for s in ["3,2,2", "2,2", "2,3,1", "4"] {
            let a = build_action(&comp(s)).unwrap();
            for class in [None, Some(0)] {
                let k = commutant(&a, class).unwrap();
                assert!(k.contains(&Matrix::identity(k.span.len())), "{s}");
            }
        }
    }

    #[test]
    fn commutant_2_2() {
        let a = build_action(&comp("2,2")).unwrap();
        let k = commutant(&a, None).unwrap();
        assert!(k.dim() >= 2);
        for members in a.classes() {
            let mut p = Matrix::zeros(a.dim());
            for &j in members {
                p.set(j, j, int(1));
            }
            assert!(k.contains(&p));
        }
        assert_eq!(k.dim(), brute_commutant_dim(&a, &k.span));
    }

    #[test]
    fn commutant_322_e0() {
        let a = build_action(&comp("3,2,2")).unwrap();
        let k = commutant(&a, Some(0)).unwrap();
        assert_eq!(k.span.len(), 2);
        assert_eq!(k.dim(), brute_commutant_dim(&a, &k.span));
        assert_eq!(k.dim(), 1);
        let r = k.report();
        assert!(r.local);
        assert_eq!(r.radical_dim, 0);
    }

    #[test]
    fn brute_matches_solver_on_tiny_spans() {
        for s in ["2,1", "1,2", "2,2", "3,1", "1,3", "2,1,1", "1,2,1", "3,2", "2,3"] {
            let a = build_action(&comp(s)).unwrap();
            for c in 0..a.classes().len() {
                let k = commutant(&a, Some(c)).unwrap();
                if k.span.len() <= 3 {
                    assert_eq!(k.dim(), brute_commutant_dim(&a, &k.span), "{s} class {c}");
                }
            }
        }
    }

    #[test]
    fn radical_is_nilpotent() {
        for s in ["2,3,1", "1,3,2", "2,2,2", "3,1,2"] {
            let a = build_action(&comp(s)).unwrap();
            let k = commutant(&a, None).unwrap();
            for coords in k.radical() {
                let x = k.element(&coords);
                let mut p = x.clone();
                for _ in 0..k.span.len() {
                    p = &p * &x;
                }
                assert!(p.is_zero(), "{s}");
            }
        }
    }

    #[test]
    fn certify_examples() {
        let c = is_indecomposable_certified(&comp("2,1,1,3")).unwrap();
        assert_eq!(c.verdict, Verdict::Indecomposable);
        assert_eq!(c.classes, 1);
        assert!(c.e0.local);
        assert!(c.is_consistent());

        let c = is_indecomposable_certified(&comp("2,3,1,4")).unwrap_err();
        assert!(matches!(c, SyrtError::Resource { .. }));
        let c = certify_with_limit(&comp("2,3,1,4"), 10).unwrap();
        assert_eq!(c.verdict, Verdict::Decomposable);
        assert!(c.classes >= 2);

        let c = is_indecomposable_certified(&comp("2,2")).unwrap();
        assert_eq!(c.verdict, Verdict::Decomposable);
        assert_eq!(c.full.idempotent_blocks, Some(vec![vec![1], vec![0]]));
        assert!(c.is_consistent());
    }

    #[test]
    fn report_json_keys() {
        let c = is_indecomposable_certified(&comp("3,2,2")).unwrap();
        let v = c.to_json();
        assert_eq!(v["alpha"], serde_json::json!([3, 2, 2]));
        assert_eq!(v["verdict"], "decomposable");
        assert_eq!(v["e0"]["dim"], 2);
        assert_eq!(v["e0"]["local"], true);
    }

    #[test]
    fn witness_for_five_rows() {
        let alpha = comp("5,3,4,1,2");
        let t_hat = syrt(
            "5,3,4,1,2",
            &[&[1, 2, 4, 7, 12], &[3, 5, 8], &[6, 9, 13, 14], &[10], &[11, 15]],
        );
        let w = witness_sequence(&alpha, &t_hat).unwrap();
        assert_eq!(w.epsilon, 12);
        assert_eq!(w.x, 9);
        assert_eq!(w.sequence, vec![9, 10, 11]);
        let des: BTreeSet<usize> = [1, 3, 6, 11, 13].into_iter().collect();
        assert_eq!(t_hat.descent_set(), des);
        assert_eq!(alpha.t_sup().descent_set(), des);
    }

    #[test]
    fn witness_preconditions() {
        let alpha = comp("4");
        let sup = alpha.t_sup();
        assert!(matches!(witness_sequence(&alpha, &sup), Err(SyrtError::Domain(_))));
        let a = build_action(&comp("3,2,2")).unwrap();
        let outside = &a.basis()[a.classes()[1][0]];
        assert!(matches!(
            witness_sequence(&comp("3,2,2"), outside),
            Err(SyrtError::Domain(_))
        ));
        assert!(matches!(
            witness_sequence(&comp("2,2"), outside),
            Err(SyrtError::Domain(_))
        ));
    }
}
