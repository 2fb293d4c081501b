//! Homogeneous quasisymmetric functions in the monomial and fundamental bases.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::composition::Composition;
use crate::error::{Result, SyrtError};
use crate::tableau::{enumerate_syrt_with_limit, Syrt, ENUMERATION_LIMIT};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Basis {
    M,
    F,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::M => "M",
            Basis::F => "F",
        })
    }
}

/// A degree-homogeneous integer combination of basis elements. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymElement {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Composition, BigInt>,
}

impl QSymElement {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        QSymElement {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// A single basis element `M_α` or `F_α`.
    pub fn basis_element(basis: Basis, alpha: Composition) -> Self {
        let mut x = Self::zero(basis, alpha.size());
        x.coeffs.insert(alpha, BigInt::from(1));
        x
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Terms in canonical key order (length, then lexicographic).
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, alpha: &Composition) -> BigInt {
        self.coeffs.get(alpha).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, alpha: Composition, c: BigInt) -> Result<()> {
        if alpha.size() != self.degree {
            return Err(SyrtError::Domain(format!(
                "{alpha} has degree {}, element has degree {}",
                alpha.size(),
                self.degree
            )));
        }
        let entry = self.coeffs.entry(alpha).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn add(&self, other: &QSymElement) -> Result<QSymElement> {
        if self.basis != other.basis {
            return Err(SyrtError::Domain("cannot add elements in different bases".into()));
        }
        let mut out = self.clone();
        for (alpha, c) in other.terms() {
            out.add_term(alpha.clone(), c.clone())?;
        }
        Ok(out)
    }

    /// Re-expresses the element in the monomial basis.
    pub fn to_m(&self) -> QSymElement {
        match self.basis {
            Basis::M => self.clone(),
            Basis::F => f_to_m(self),
        }
    }
}

impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (alpha, c)) in self.terms().enumerate() {
            match (k, c.sign()) {
                (0, num_bigint::Sign::Minus) => write!(f, "-")?,
                (0, _) => {}
                (_, num_bigint::Sign::Minus) => write!(f, " - ")?,
                _ => write!(f, " + ")?,
            }
            let mag = c.magnitude();
            if *mag != 1u32.into() {
                write!(f, "{mag}")?;
            }
            write!(f, "{}{alpha}", self.basis)?;
        }
        Ok(())
    }
}

impl Serialize for QSymElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            comp: &'a Composition,
            coeff: serde_json::Value,
        }
        let terms: Vec<Term> = self
            .terms()
            .map(|(comp, c)| Term {
                comp,
                // Coefficients outside i64 fall back to their decimal string.
                coeff: c
                    .to_i64()
                    .map_or_else(|| serde_json::Value::String(c.to_string()), Into::into),
            })
            .collect();
        let mut st = s.serialize_struct("QSymElement", 2)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// `Σ_T F_{comp_n(Des(T))}` over a list of tableaux of one shape.
pub fn f_expansion_of<'a>(degree: usize, tableaux: impl IntoIterator<Item = &'a Syrt>) -> QSymElement {
    let mut x = QSymElement::zero(Basis::F, degree);
    for t in tableaux {
        x.add_term(t.descent_composition(), BigInt::from(1))
            .expect("descent compositions have the shape's degree");
    }
    x
}

/// The Young row-strict quasisymmetric Schur function `R_α` in the F basis.
pub fn expand_r_in_f(alpha: &Composition) -> Result<QSymElement> {
    expand_r_in_f_with_limit(alpha, ENUMERATION_LIMIT)
}

pub fn expand_r_in_f_with_limit(alpha: &Composition, limit: usize) -> Result<QSymElement> {
    let all = enumerate_syrt_with_limit(alpha, limit)?;
    Ok(f_expansion_of(alpha.size(), &all))
}

/// `F_α ↦ Σ_{β refines α} M_β`, extended linearly.
pub fn f_to_m(x: &QSymElement) -> QSymElement {
    if x.basis == Basis::M {
        return x.clone();
    }
    let n = x.degree;
    let mut out = QSymElement::zero(Basis::M, n);
    for (alpha, c) in x.terms() {
        let base = alpha.subset();
        let free: Vec<usize> = (1..n).filter(|s| !base.contains(s)).collect();
        for mask in 0u64..1 << free.len() {
            let mut s: BTreeSet<usize> = base.clone();
            s.extend(
                free.iter()
                    .enumerate()
                    .filter(|(j, _)| mask & (1 << j) != 0)
                    .map(|(_, &v)| v),
            );
            let beta = Composition::from_subset(&s, n).expect("subset of 1..n");
            out.add_term(beta, c.clone()).expect("same degree");
        }
    }
    out
}

/// Integer polynomial in `x_1, …, x_m`, keyed by exponent vectors.
pub type Polynomial = BTreeMap<Vec<u32>, BigInt>;

/// Evaluates `x` in the first `m` variables, giving every other variable the
/// value zero.
pub fn evaluate_truncated(x: &QSymElement, m: usize) -> Result<Polynomial> {
    if m == 0 {
        return Err(SyrtError::Domain("need at least one variable".into()));
    }
    let mono = x.to_m();
    let mut poly = Polynomial::new();
    for (alpha, c) in mono.terms() {
        let k = alpha.len();
        if k > m {
            continue;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut exps = vec![0u32; m];
            for (slot, &v) in idx.iter().enumerate() {
                exps[v] = alpha.parts()[slot] as u32;
            }
            *poly.entry(exps).or_default() += c;
            // Next strictly increasing index tuple.
            let Some(p) = (0..k).rfind(|&p| idx[p] < m - k + p) else {
                break;
            };
            idx[p] += 1;
            for q in p + 1..k {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    poly.retain(|_, v| !v.is_zero());
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::compositions_of;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn f_sum(parts: &[&str]) -> QSymElement {
        let mut x = QSymElement::zero(Basis::F, comp(parts[0]).size());
        for p in parts {
            x.add_term(comp(p), 1.into()).unwrap();
        }
        x
    }

    #[test]
    fn r_322() {
        let r = expand_r_in_f(&comp("3,2,2")).unwrap();
        assert_eq!(r, f_sum(&["1,1,2,2,1", "1,2,3,1", "1,1,3,2", "1,3,3", "1,2,2,2"]));
        assert_eq!(r.to_string(), "F(1,3,3) + F(1,1,3,2) + F(1,2,2,2) + F(1,2,3,1) + F(1,1,2,2,1)");
    }

    #[test]
    fn r_small() {
        assert_eq!(expand_r_in_f(&comp("4")).unwrap(), f_sum(&["1,1,1,1"]));
        assert_eq!(expand_r_in_f(&comp("2,2")).unwrap(), f_sum(&["1,2,1", "2,2"]));
    }

    #[test]
    fn f_to_m_examples() {
        let m = f_to_m(&QSymElement::basis_element(Basis::F, comp("1,2,2")));
        let mut want = QSymElement::zero(Basis::M, 5);
        for s in ["1,2,2", "1,1,1,2", "1,2,1,1", "1,1,1,1,1"] {
            want.add_term(comp(s), 1.into()).unwrap();
        }
        assert_eq!(m, want);

        let m = f_to_m(&QSymElement::basis_element(Basis::F, comp("4")));
        assert_eq!(m.terms().count(), 8);
        assert!(m.terms().all(|(_, c)| *c == 1.into()));

        let m = f_to_m(&QSymElement::basis_element(Basis::F, comp("1,1")));
        assert_eq!(m, QSymElement::basis_element(Basis::M, comp("1,1")));
    }

    #[test]
    fn f_to_m_matches_refinement_filter() {
        for n in 1..=6 {
            let all = compositions_of(n).unwrap();
            for alpha in &all {
                let got = f_to_m(&QSymElement::basis_element(Basis::F, alpha.clone()));
                let mut want = QSymElement::zero(Basis::M, n);
                for beta in all.iter().filter(|b| b.refines(alpha)) {
                    want.add_term(beta.clone(), 1.into()).unwrap();
                }
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn evaluation_examples() {
        let p = evaluate_truncated(&QSymElement::basis_element(Basis::M, comp("1,2,2")), 3).unwrap();
        assert_eq!(p, Polynomial::from([(vec![1, 2, 2], 1.into())]));
        let p = evaluate_truncated(&QSymElement::basis_element(Basis::M, comp("1,2,2")), 2).unwrap();
        assert!(p.is_empty());
        let p = evaluate_truncated(&QSymElement::basis_element(Basis::F, comp("1,1")), 2).unwrap();
        assert_eq!(p, Polynomial::from([(vec![1, 1], 1.into())]));
        // M_(1,2) in three variables: x1x2² + x1x3² + x2x3².
        let p = evaluate_truncated(&QSymElement::basis_element(Basis::M, comp("1,2")), 3).unwrap();
        assert_eq!(p.len(), 3);
        assert!(evaluate_truncated(&QSymElement::zero(Basis::M, 2), 0).is_err());
    }

    #[test]
    fn truncation_separates_monomials() {
        for n in 1..=6 {
            let polys: BTreeSet<Vec<(Vec<u32>, BigInt)>> = compositions_of(n)
                .unwrap()
                .into_iter()
                .map(|a| {
                    evaluate_truncated(&QSymElement::basis_element(Basis::M, a), n)
                        .unwrap()
                        .into_iter()
                        .collect()
                })
                .collect();
            assert_eq!(polys.len(), 1 << (n - 1));
        }
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut x = QSymElement::basis_element(Basis::F, comp("2,1"));
        x.add_term(comp("2,1"), (-1).into()).unwrap();
        assert!(x.is_zero());
        assert!(x.add_term(comp("2,2"), 1.into()).is_err());
    }

    #[test]
    fn json_layout() {
        let r = expand_r_in_f(&comp("2,2")).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"basis":"F","terms":[{"comp":[2,2],"coeff":1},{"comp":[1,2,1],"coeff":1}]}"#
        );
    }
}
