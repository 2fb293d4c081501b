//! The 0-Hecke action `π_i` on row-strict tableaux.
//!
//! `π_i(T)` is `T` when `i+1` is weakly left of `i`, zero when `i+1` is
//! right-adjacent to `i`, and `T` with `i` and `i+1` exchanged otherwise.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::composition::{Cell, Composition};
use crate::error::{Result, SyrtError};
use crate::tableau::{enumerate_syrt_with_limit, group_by_signature, Syrt, ENUMERATION_LIMIT};

/// Outcome of a single generator on a basis tableau.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PiResult {
    Zero,
    Fixed(Syrt),
    Swapped(Syrt),
}

impl PiResult {
    pub fn tableau(&self) -> Option<&Syrt> {
        match self {
            PiResult::Zero => None,
            PiResult::Fixed(t) | PiResult::Swapped(t) => Some(t),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Kind {
    Zero,
    Fixed,
    Swap,
}

fn classify(pos: &[Cell], i: usize) -> Kind {
    let (a, b) = (pos[i], pos[i + 1]);
    if b.col <= a.col {
        Kind::Fixed
    } else if b.row == a.row && b.col == a.col + 1 {
        Kind::Zero
    } else {
        Kind::Swap
    }
}

fn check_generator(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(SyrtError::Domain(format!(
            "generator index {i} is outside 1..={}",
            n.saturating_sub(1)
        )));
    }
    Ok(())
}

/// Applies `π_i` to `t`.
pub fn apply_pi(i: usize, t: &Syrt) -> Result<PiResult> {
    check_generator(i, t.size())?;
    Ok(match classify(&t.positions(), i) {
        Kind::Fixed => PiResult::Fixed(t.clone()),
        Kind::Zero => PiResult::Zero,
        Kind::Swap => {
            let s = Syrt::new(t.swapped(i, i + 1)).map_err(|e| {
                SyrtError::Internal(format!("s_{i} left the row-strict tableaux: {e}"))
            })?;
            PiResult::Swapped(s)
        }
    })
}

/// Applies a word of generators right to left: `word = [i_1, …, i_p]` computes
/// `π_{i_1} ⋯ π_{i_p}(t)`. Returns `None` as soon as the result is zero.
pub fn apply_word(word: &[usize], t: &Syrt) -> Result<Option<Syrt>> {
    let mut cur = t.clone();
    for &i in word.iter().rev() {
        match apply_pi(i, &cur)? {
            PiResult::Zero => return Ok(None),
            PiResult::Fixed(s) | PiResult::Swapped(s) => cur = s,
        }
    }
    Ok(Some(cur))
}

/// Source criterion: for every non-descent `i < n`, `i+1` is in the column of
/// `i`, or in the column immediately left and a higher row.
pub fn is_source(t: &Syrt) -> bool {
    let pos = t.positions();
    (1..t.size()).all(|i| {
        let (a, b) = (pos[i], pos[i + 1]);
        b.col >= a.col || (b.col + 1 == a.col && b.row > a.row)
    })
}

/// Tableaux `T'` with `π_i(T') = t` and `T' ≠ t`, paired with `i`.
pub fn predecessors(t: &Syrt) -> Vec<(usize, Syrt)> {
    let pos = t.positions();
    (1..t.size())
        .filter(|&i| pos[i + 1].col < pos[i].col)
        .filter_map(|i| {
            let prev = Syrt::new(t.swapped(i, i + 1)).ok()?;
            (classify(&prev.positions(), i) == Kind::Swap).then_some((i, prev))
        })
        .collect()
}

/// Everything reachable from `t` by non-trivial moves, `t` included.
pub fn closure(t: &Syrt) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([t.clone()]);
    seen.insert(t.reading_word());
    while let Some(cur) = queue.pop_front() {
        for i in 1..cur.size() {
            if let Ok(PiResult::Swapped(s)) = apply_pi(i, &cur) {
                if seen.insert(s.reading_word()) {
                    queue.push_back(s);
                }
            }
        }
    }
    seen
}

/// `closure` as tableaux rather than reading words.
pub fn closure_tableaux(t: &Syrt) -> Vec<Syrt> {
    let shape = t.shape().clone();
    closure(t)
        .into_iter()
        .map(|word| {
            let mut rest = &word[..];
            let rows = shape
                .parts()
                .iter()
                .map(|&len| {
                    let (row, tail) = rest.split_at(len);
                    rest = tail;
                    row.to_vec()
                })
                .collect();
            Syrt::from_rows(shape.clone(), rows).expect("moves stay inside SYRT")
        })
        .collect()
}

/// Number of moves separating `t` from the source of its class, found by
/// walking backwards along predecessors. Every move raises rank by one, so
/// any backward path works.
pub fn rank(t: &Syrt) -> usize {
    let mut cur = t.clone();
    let mut steps = 0;
    while let Some((_, prev)) = predecessors(&cur).into_iter().next() {
        cur = prev;
        steps += 1;
    }
    steps
}

/// One entry of a generator table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Move {
    Zero,
    Fixed,
    Swap(usize),
}

impl Move {
    /// Image of basis element `from`, or `None` for zero.
    pub fn target(self, from: usize) -> Option<usize> {
        match self {
            Move::Zero => None,
            Move::Fixed => Some(from),
            Move::Swap(to) => Some(to),
        }
    }
}

/// The tabulated action of `π_1, …, π_{n-1}` on the basis `SYRT(α)`.
#[derive(Clone, Debug)]
pub struct HeckeAction {
    shape: Composition,
    basis: Vec<Syrt>,
    maps: Vec<Vec<Move>>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

/// Builds the action with the default size cap.
pub fn build_action(shape: &Composition) -> Result<HeckeAction> {
    build_action_with_limit(shape, ENUMERATION_LIMIT)
}

pub fn build_action_with_limit(shape: &Composition, limit: usize) -> Result<HeckeAction> {
    let basis = enumerate_syrt_with_limit(shape, limit)?;
    HeckeAction::from_basis(shape.clone(), basis)
}

impl HeckeAction {
    /// Tabulates every generator over `basis`, which must be closed under the
    /// action.
    pub fn from_basis(shape: Composition, basis: Vec<Syrt>) -> Result<Self> {
        let n = shape.size();
        let index: HashMap<Vec<usize>, usize> = basis
            .iter()
            .enumerate()
            .map(|(k, t)| (t.reading_word(), k))
            .collect();
        let positions: Vec<Vec<Cell>> = basis.iter().map(|t| t.positions()).collect();
        let mut maps = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            let mut row = Vec::with_capacity(basis.len());
            for (k, t) in basis.iter().enumerate() {
                let m = match classify(&positions[k], i) {
                    Kind::Fixed => Move::Fixed,
                    Kind::Zero => Move::Zero,
                    Kind::Swap => {
                        let word = t.swapped(i, i + 1).reading_word();
                        let to = *index.get(&word).ok_or_else(|| {
                            SyrtError::Internal(format!(
                                "π_{i} sends basis element {k} outside the basis"
                            ))
                        })?;
                        Move::Swap(to)
                    }
                };
                row.push(m);
            }
            maps.push(row);
        }
        let groups = group_by_signature(&basis);
        let mut class_of = vec![0; basis.len()];
        let mut classes = Vec::with_capacity(groups.len());
        for (c, (_, members)) in groups.into_iter().enumerate() {
            for &k in &members {
                class_of[k] = c;
            }
            classes.push(members);
        }
        Ok(HeckeAction {
            shape,
            basis,
            maps,
            class_of,
            classes,
        })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn basis(&self) -> &[Syrt] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of generators, `n - 1`.
    pub fn generator_count(&self) -> usize {
        self.maps.len()
    }

    /// The table of `π_i`, `1 ≤ i ≤ n-1`.
    pub fn generator(&self, i: usize) -> &[Move] {
        &self.maps[i - 1]
    }

    pub fn image(&self, i: usize, from: usize) -> Option<usize> {
        self.maps[i - 1][from].target(from)
    }

    /// Applies a word right to left to basis element `from`.
    pub fn apply_word(&self, word: &[usize], from: usize) -> Option<usize> {
        word.iter()
            .rev()
            .try_fold(from, |k, &i| self.image(i, k))
    }

    /// Classes of basis indices, `E_0` first.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, k: usize) -> usize {
        self.class_of[k]
    }

    /// Non-trivial moves `(from, to, i)`.
    pub fn swap_edges(&self) -> Vec<(usize, usize, usize)> {
        let mut edges = Vec::new();
        for (g, row) in self.maps.iter().enumerate() {
            for (k, m) in row.iter().enumerate() {
                if let Move::Swap(to) = *m {
                    edges.push((k, to, g + 1));
                }
            }
        }
        edges
    }

    /// Checks idempotence, far commutation, and the braid relation on every
    /// basis element.
    pub fn verify_relations(&self) -> std::result::Result<(), RelationFailure> {
        let m = self.generator_count();
        for k in 0..self.dim() {
            for i in 1..=m {
                if self.apply_word(&[i, i], k) != self.apply_word(&[i], k) {
                    return Err(RelationFailure::Idempotent { i, basis: k });
                }
                for j in i + 2..=m {
                    if self.apply_word(&[i, j], k) != self.apply_word(&[j, i], k) {
                        return Err(RelationFailure::FarCommute { i, j, basis: k });
                    }
                }
                if i < m && self.apply_word(&[i, i + 1, i], k) != self.apply_word(&[i + 1, i, i + 1], k) {
                    return Err(RelationFailure::Braid { i, basis: k });
                }
            }
        }
        Ok(())
    }

    /// Basis indices with no incoming non-trivial move.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_pred = vec![false; self.dim()];
        for (_, to, _) in self.swap_edges() {
            has_pred[to] = true;
        }
        (0..self.dim()).filter(|&k| !has_pred[k]).collect()
    }

    /// Reachable set from `from` along non-trivial moves.
    pub fn closure_indices(&self, from: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([from]);
        let mut queue = VecDeque::from([from]);
        while let Some(k) = queue.pop_front() {
            for row in &self.maps {
                if let Move::Swap(to) = row[k] {
                    if seen.insert(to) {
                        queue.push_back(to);
                    }
                }
            }
        }
        seen
    }

    /// Topological order of the move graph, or `None` if it has a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indegree = vec![0usize; self.dim()];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.dim()];
        for (from, to, _) in self.swap_edges() {
            indegree[to] += 1;
            out[from].push(to);
        }
        let mut queue: VecDeque<usize> = (0..self.dim()).filter(|&k| indegree[k] == 0).collect();
        let mut order = Vec::with_capacity(self.dim());
        while let Some(k) = queue.pop_front() {
            order.push(k);
            for &to in &out[k] {
                indegree[to] -= 1;
                if indegree[to] == 0 {
                    queue.push_back(to);
                }
            }
        }
        (order.len() == self.dim()).then_some(order)
    }

    /// Breadth-first distance of every basis element from the source of its
    /// class.
    ///
    /// Fails unless each class has exactly one source, the source reaches the
    /// whole class, and every non-trivial move raises the distance by exactly
    /// one.
    pub fn ranks(&self) -> Result<Vec<usize>> {
        let sources = self.sources();
        let mut rank = vec![usize::MAX; self.dim()];
        for (c, members) in self.classes.iter().enumerate() {
            let class_sources: Vec<usize> = sources
                .iter()
                .copied()
                .filter(|&k| self.class_of[k] == c)
                .collect();
            let [source] = class_sources[..] else {
                return Err(SyrtError::Internal(format!(
                    "class {c} has {} sources",
                    class_sources.len()
                )));
            };
            rank[source] = 0;
            let mut queue = VecDeque::from([source]);
            while let Some(k) = queue.pop_front() {
                for row in &self.maps {
                    if let Move::Swap(to) = row[k] {
                        if rank[to] == usize::MAX {
                            rank[to] = rank[k] + 1;
                            queue.push_back(to);
                        }
                    }
                }
            }
            if let Some(&k) = members.iter().find(|&&k| rank[k] == usize::MAX) {
                return Err(SyrtError::Internal(format!(
                    "basis element {k} is unreachable from the source of class {c}"
                )));
            }
        }
        for (from, to, i) in self.swap_edges() {
            if rank[to] != rank[from] + 1 {
                return Err(SyrtError::Internal(format!(
                    "π_{i} moves {from} (rank {}) to {to} (rank {})",
                    rank[from], rank[to]
                )));
            }
        }
        Ok(rank)
    }

    /// Dense 0/1 matrix of `π_i`: column `k` is the image of basis element `k`.
    pub fn matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let d = self.dim();
        let mut m = vec![vec![0; d]; d];
        for (k, mv) in self.maps[i - 1].iter().enumerate() {
            if let Some(to) = mv.target(k) {
                m[to][k] = 1;
            }
        }
        m
    }
}

impl Serialize for HeckeAction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Table<'a>(&'a [Move]);
        struct Entry(usize, Move);

        impl Serialize for Entry {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let (to, kind) = match self.1 {
                    Move::Zero => (None, "zero"),
                    Move::Fixed => (Some(self.0), "fixed"),
                    Move::Swap(to) => (Some(to), "swap"),
                };
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("from", &self.0)?;
                m.serialize_entry("kind", kind)?;
                m.serialize_entry("to", &to)?;
                m.end()
            }
        }

        impl Serialize for Table<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_seq(self.0.iter().enumerate().map(|(k, &m)| Entry(k, m)))
            }
        }

        let mut st = s.serialize_struct("HeckeAction", 3)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field(
            "generators",
            &self.maps.iter().map(|row| Table(row)).collect::<Vec<_>>(),
        )?;
        st.serialize_field("shape", &self.shape)?;
        st.end()
    }
}

/// A relation that failed on some basis element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RelationFailure {
    Idempotent { i: usize, basis: usize },
    FarCommute { i: usize, j: usize, basis: usize },
    Braid { i: usize, basis: usize },
}

impl fmt::Display for RelationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RelationFailure::Idempotent { i, basis } => {
                write!(f, "π_{i}² ≠ π_{i} on basis element {basis}")
            }
            RelationFailure::FarCommute { i, j, basis } => {
                write!(f, "π_{i}π_{j} ≠ π_{j}π_{i} on basis element {basis}")
            }
            RelationFailure::Braid { i, basis } => write!(
                f,
                "π_{i}π_{}π_{i} ≠ π_{}π_{i}π_{} on basis element {basis}",
                i + 1,
                i + 1,
                i + 1
            ),
        }
    }
}

/// A composition series `0 = R_0 ⊂ R_1 ⊂ ⋯ ⊂ R_m` with one-dimensional
/// quotients.
#[derive(Clone, Debug, Serialize)]
pub struct Filtration {
    /// Basis indices `T_1, …, T_m`; `R_j` is spanned by the first `j`.
    pub chain: Vec<usize>,
    /// `comp_n(Des(T_j))` for each `j`, the composition of quotient `R_j/R_{j-1}`.
    pub quotient_descents: Vec<Composition>,
}

impl Filtration {
    /// The quotient compositions with multiplicity.
    pub fn multiset(&self) -> BTreeMap<Composition, usize> {
        let mut m = BTreeMap::new();
        for c in &self.quotient_descents {
            *m.entry(c.clone()).or_insert(0) += 1;
        }
        m
    }
}

/// Builds the chain from a linear extension of the move order and checks each
/// quotient against the one-dimensional irreducible action.
///
/// The extension sorts by (class, rank, reading word); the chain lists it from
/// the top, so every prefix spans a submodule.
pub fn composition_series(action: &HeckeAction) -> Result<Filtration> {
    if action.topological_order().is_none() {
        return Err(SyrtError::Internal("the move graph has a cycle".into()));
    }
    let ranks = action.ranks()?;
    let mut order: Vec<usize> = (0..action.dim()).collect();
    order.sort_by_cached_key(|&k| (action.class_of(k), ranks[k], action.basis()[k].reading_word()));
    order.reverse();
    let chain = order;

    let mut position = vec![0; action.dim()];
    for (j, &k) in chain.iter().enumerate() {
        position[k] = j;
    }
    let mut quotient_descents = Vec::with_capacity(chain.len());
    for (j, &k) in chain.iter().enumerate() {
        let t = &action.basis()[k];
        let descents = t.descent_set();
        for i in 1..=action.generator_count() {
            // Coefficient of T_j in π_i(T_j) modulo R_{j-1}.
            let acts_by_one = match action.generator(i)[k] {
                Move::Fixed => true,
                Move::Zero => false,
                Move::Swap(to) => {
                    if position[to] >= j {
                        return Err(SyrtError::Internal(format!(
                            "π_{i}(T_{}) leaves R_{}",
                            j + 1,
                            j + 1
                        )));
                    }
                    false
                }
            };
            if acts_by_one == descents.contains(&i) {
                return Err(SyrtError::Internal(format!(
                    "quotient {} disagrees with its descent set at π_{i}",
                    j + 1
                )));
            }
        }
        quotient_descents.push(t.descent_composition());
    }
    Ok(Filtration {
        chain,
        quotient_descents,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::enumerate_syrt;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn syrt(shape: &str, rows: &[&[usize]]) -> Syrt {
        Syrt::from_rows(comp(shape), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn pi_example() {
        let t = syrt("3,2,2", &[&[1, 2, 4], &[3, 7], &[5, 6]]);
        for i in [2, 4, 6] {
            assert_eq!(apply_pi(i, &t).unwrap(), PiResult::Fixed(t.clone()));
        }
        for i in [1, 5] {
            assert_eq!(apply_pi(i, &t).unwrap(), PiResult::Zero);
        }
        assert_eq!(
            apply_pi(3, &t).unwrap(),
            PiResult::Swapped(syrt("3,2,2", &[&[1, 2, 3], &[4, 7], &[5, 6]]))
        );
        assert!(matches!(apply_pi(0, &t), Err(SyrtError::Domain(_))));
        assert!(matches!(apply_pi(7, &t), Err(SyrtError::Domain(_))));
    }

    #[test]
    fn pi_trivial_cases() {
        let col = syrt("1,1", &[&[1], &[2]]);
        assert_eq!(apply_pi(1, &col).unwrap(), PiResult::Fixed(col.clone()));
        let row = syrt("2", &[&[1, 2]]);
        assert_eq!(apply_pi(1, &row).unwrap(), PiResult::Zero);
        // 2 and 3 side by side in the top row.
        let t = syrt("2,2", &[&[1, 4], &[2, 3]]);
        assert_eq!(apply_pi(2, &t).unwrap(), PiResult::Zero);
    }

    #[test]
    fn action_tables() {
        let a = build_action(&comp("3,2,2")).unwrap();
        assert_eq!(a.dim(), 5);
        assert_eq!(a.generator_count(), 6);
        // Fixed exactly off the descent set.
        for (k, t) in a.basis().iter().enumerate() {
            let des = t.descent_set();
            for i in 1..7 {
                assert_eq!(a.generator(i)[k] == Move::Fixed, !des.contains(&i));
            }
        }
        assert_eq!(build_action(&comp("1")).unwrap().generator_count(), 0);

        let a = build_action(&comp("2,2")).unwrap();
        let k = a
            .basis()
            .iter()
            .position(|t| t.rows() == [vec![1, 4], vec![2, 3]])
            .unwrap();
        assert_eq!(a.generator(2)[k], Move::Zero);
    }

    #[test]
    fn relations_small() {
        for s in ["3,2,2", "1,1", "1", "2,2", "2,5,1"] {
            assert_eq!(build_action(&comp(s)).unwrap().verify_relations(), Ok(()), "{s}");
        }
    }

    #[test]
    fn broken_tables_are_reported() {
        let mut a = build_action(&comp("3,2,2")).unwrap();
        // Make π_1 send everything to basis element 0.
        a.maps[0] = (0..a.dim()).map(|k| if k == 0 { Move::Fixed } else { Move::Swap(0) }).collect();
        a.maps[0][0] = Move::Swap(1);
        assert!(matches!(
            a.verify_relations(),
            Err(RelationFailure::Idempotent { i: 1, .. })
        ));
    }

    #[test]
    fn sources_322() {
        let listed = [
            syrt("3,2,2", &[&[1, 2, 3], &[4, 5], &[6, 7]]),
            syrt("3,2,2", &[&[1, 2, 4], &[3, 5], &[6, 7]]),
            syrt("3,2,2", &[&[1, 2, 3], &[4, 7], &[5, 6]]),
            syrt("3,2,2", &[&[1, 2, 5], &[3, 7], &[4, 6]]),
            syrt("3,2,2", &[&[1, 2, 4], &[3, 7], &[5, 6]]),
        ];
        let flags: Vec<bool> = listed.iter().map(is_source).collect();
        assert_eq!(flags, vec![false, true, false, true, false]);
        assert!(is_source(&syrt("4", &[&[1, 2, 3, 4]])));

        let e0 = closure(&listed[1]);
        assert_eq!(e0.len(), 2);
        assert!(e0.contains(&listed[0].reading_word()));
        assert_eq!(rank(&listed[1]), 0);
        assert_eq!(rank(&listed[0]), 1);
    }

    #[test]
    fn ranks_agree_with_backward_walk() {
        for s in ["3,2,2", "2,3,1", "1,3,2", "2,2,2"] {
            let a = build_action(&comp(s)).unwrap();
            let r = a.ranks().unwrap();
            for (k, t) in a.basis().iter().enumerate() {
                assert_eq!(rank(t), r[k], "{s} {k}");
            }
        }
    }

    #[test]
    fn rank_three_example() {
        let alpha = comp("5,3,4,1,2");
        let sup = alpha.t_sup();
        let hat = apply_word(&[14, 12, 13], &sup).unwrap().unwrap();
        assert_eq!(
            hat.rows(),
            &[vec![1, 2, 4, 7, 12], vec![3, 5, 8], vec![6, 9, 13, 14], vec![10], vec![11, 15]]
        );
        assert_eq!(rank(&sup), 0);
        assert_eq!(rank(&hat), 3);
    }

    #[test]
    fn series_examples() {
        let m = composition_series(&build_action(&comp("3,2,2")).unwrap()).unwrap().multiset();
        let want: BTreeMap<Composition, usize> =
            ["1,1,2,2,1", "1,2,3,1", "1,1,3,2", "1,3,3", "1,2,2,2"].iter().map(|s| (comp(s), 1)).collect();
        assert_eq!(m, want);

        let m = composition_series(&build_action(&comp("4")).unwrap()).unwrap().multiset();
        assert_eq!(m, BTreeMap::from([(comp("1,1,1,1"), 1)]));

        let m = composition_series(&build_action(&comp("2,2")).unwrap()).unwrap().multiset();
        assert_eq!(m, BTreeMap::from([(comp("1,2,1"), 1), (comp("2,2"), 1)]));
    }

    #[test]
    fn closure_tableaux_match_indices() {
        let alpha = comp("2,3,1,2");
        let a = build_action(&alpha).unwrap();
        for (c, members) in a.classes().iter().enumerate() {
            let src = a.sources().into_iter().find(|&k| a.class_of(k) == c).unwrap();
            let via_pi: BTreeSet<_> = closure_tableaux(&a.basis()[src]).into_iter().collect::<Vec<_>>().into_iter().map(|t| t.reading_word()).collect();
            let via_table: BTreeSet<_> = members.iter().map(|&k| a.basis()[k].reading_word()).collect();
            assert_eq!(via_pi, via_table);
        }
        let _ = enumerate_syrt(&alpha).unwrap();
    }

    #[test]
    fn action_json_shape() {
        let a = build_action(&comp("2,2")).unwrap();
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(v["basis"].as_array().unwrap().len(), 2);
        assert_eq!(v["generators"].as_array().unwrap().len(), 3);
        let e = &v["generators"][1][0];
        assert_eq!(e["kind"], "zero");
        assert!(e["to"].is_null());
    }
}
