//! Standard Young row-strict composition tableaux.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::composition::{Cell, Composition};
use crate::error::{check_limit, Result, SyrtError};

/// Default cap on `|α|` for enumeration-backed operations.
pub const ENUMERATION_LIMIT: usize = 10;

/// Cap on `|α|` for the `n!` brute-force filter.
pub const BRUTE_FORCE_LIMIT: usize = 8;

/// A bijective filling of `D(α)` with `1..=n`.
///
/// Rows are stored bottom to top.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Tableau {
    shape: Composition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: Composition, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.len() {
            return Err(SyrtError::Malformed(format!(
                "shape {shape} has {} rows but {} were given",
                shape.len(),
                rows.len()
            )));
        }
        for (r, (row, &len)) in rows.iter().zip(shape.parts()).enumerate() {
            if row.len() != len {
                return Err(SyrtError::Malformed(format!(
                    "row {} has {} entries, shape {shape} needs {len}",
                    r + 1,
                    row.len()
                )));
            }
        }
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n {
                return Err(SyrtError::Malformed(format!("entry {e} is outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[e], true) {
                return Err(SyrtError::Malformed(format!("entry {e} appears twice")));
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    /// Rows, bottom to top.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, cell: Cell) -> Option<usize> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    /// Cell of every entry; index 0 is unused.
    pub fn positions(&self) -> Vec<Cell> {
        let mut pos = vec![Cell::new(0, 0); self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                pos[e] = Cell::new(c + 1, r + 1);
            }
        }
        pos
    }

    pub fn position(&self, entry: usize) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter()
                .position(|&e| e == entry)
                .map(|c| Cell::new(c + 1, r + 1))
        })
    }

    /// Entries of column `col`, bottom to top.
    pub fn column(&self, col: usize) -> Vec<usize> {
        self.rows
            .iter()
            .filter_map(|row| row.get(col - 1).copied())
            .collect()
    }

    /// Row-reading word, bottom row first, each row left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// The filling with `a` and `b` exchanged.
    pub fn swapped(&self, a: usize, b: usize) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| match e {
                        e if e == a => b,
                        e if e == b => a,
                        e => e,
                    })
                    .collect()
            })
            .collect();
        Tableau {
            shape: self.shape.clone(),
            rows,
        }
    }

    /// Checks the row-strict axioms, reporting the first violation found.
    ///
    /// Scan order: (R1) row by row from the bottom, (R2) up the first
    /// column, then (R3) by column, upper row, lower row.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        for (r, row) in self.rows.iter().enumerate() {
            for c in 1..row.len() {
                if row[c - 1] > row[c] {
                    return Err(Violation::Row {
                        left: Cell::new(c, r + 1),
                        right: Cell::new(c + 1, r + 1),
                    });
                }
            }
        }
        for r in 1..self.rows.len() {
            if self.rows[r - 1][0] > self.rows[r][0] {
                return Err(Violation::FirstColumn {
                    lower: Cell::new(1, r),
                    upper: Cell::new(1, r + 1),
                });
            }
        }
        for c in 1..self.shape.max_part() {
            for r in self.shape.column_rows(c) {
                let a = self.rows[r - 1][c - 1];
                let b = self.entry(Cell::new(c + 1, r));
                for lower in self.shape.column_rows(c + 1).take_while(|&rr| rr < r) {
                    let z = self.rows[lower - 1][c];
                    // An absent upper-right cell counts as larger than everything.
                    let holds = a > z || b.is_some_and(|b| b < z);
                    if !holds {
                        return Err(Violation::Triple {
                            upper_left: Cell::new(c, r),
                            upper_right: b.map(|_| Cell::new(c + 1, r)),
                            lower_right: Cell::new(c + 1, lower),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Text rendering, top row first.
    pub fn render(&self) -> String {
        let width = self.size().to_string().len();
        let mut out = String::new();
        for row in self.rows.iter().rev() {
            let line: Vec<String> = row.iter().map(|e| format!("{e:>width$}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

#[derive(Deserialize)]
struct RawTableau {
    shape: Composition,
    rows: Vec<Vec<usize>>,
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawTableau::deserialize(d)?;
        Tableau::new(raw.shape, raw.rows).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The first axiom violated by a filling.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Violation {
    /// (R1): a row does not increase left to right.
    Row { left: Cell, right: Cell },
    /// (R2): the first column does not increase bottom to top.
    FirstColumn { lower: Cell, upper: Cell },
    /// (R3): `upper_left < lower_right` but the upper-right cell is missing or
    /// not smaller than `lower_right`.
    Triple {
        upper_left: Cell,
        upper_right: Option<Cell>,
        lower_right: Cell,
    },
}

impl Violation {
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::Row { .. } => "R1",
            Violation::FirstColumn { .. } => "R2",
            Violation::Triple { .. } => "R3",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Row { left, right } => write!(f, "(R1) at cells {left},{right}"),
            Violation::FirstColumn { lower, upper } => write!(f, "(R2) at cells {lower},{upper}"),
            Violation::Triple {
                upper_left,
                lower_right,
                ..
            } => write!(f, "(R3) at cells {upper_left},{lower_right}"),
        }
    }
}

/// A tableau satisfying (R1)–(R3).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Syrt(Tableau);

impl Syrt {
    pub fn new(tableau: Tableau) -> Result<Self> {
        tableau.validate().map_err(SyrtError::NotSyrt)?;
        Ok(Syrt(tableau))
    }

    pub fn from_rows(shape: Composition, rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(Tableau::new(shape, rows)?)
    }

    pub fn tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn into_tableau(self) -> Tableau {
        self.0
    }

    /// Entries `i` with `i + 1` strictly right of `i`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let pos = self.positions();
        (1..self.size())
            .filter(|&i| pos[i + 1].col > pos[i].col)
            .collect()
    }

    /// `comp_n(Des(T))`.
    pub fn descent_composition(&self) -> Composition {
        Composition::from_subset(&self.descent_set(), self.size())
            .expect("descents lie in 1..n")
    }

    pub fn column_signature(&self) -> ColumnSignature {
        let cols = (1..=self.shape().max_part())
            .map(|c| {
                let col = self.column(c);
                col.iter()
                    .map(|e| col.iter().filter(|&x| x < e).count())
                    .collect()
            })
            .collect();
        ColumnSignature(cols)
    }

    /// True when every column increases bottom to top, i.e. `T ∈ E_0`.
    pub fn columns_increasing(&self) -> bool {
        (1..=self.shape().max_part()).all(|c| self.column(c).windows(2).all(|w| w[0] < w[1]))
    }

    /// Running totals of the column sums: entry `j` is the sum of all entries in
    /// columns `1..=j`.
    pub fn d_statistic(&self) -> Vec<usize> {
        let mut acc = 0;
        (1..=self.shape().max_part())
            .map(|c| {
                acc += self.column(c).iter().sum::<usize>();
                acc
            })
            .collect()
    }

    /// Removable cells holding the largest entry of their column.
    pub fn distinguished_removable_cells(&self) -> Vec<Cell> {
        self.shape()
            .removable_cells()
            .into_iter()
            .filter(|&cell| {
                let e = self.entry(cell).expect("removable cells lie in the diagram");
                self.column(cell.col).iter().all(|&x| x <= e)
            })
            .collect()
    }

    /// The tableau obtained by deleting the cell holding `n`.
    pub fn remove_max(&self) -> Option<Syrt> {
        let n = self.size();
        let cell = self.position(n)?;
        let shape = self.shape().decrement_row(cell.row).ok()??;
        let mut rows = self.rows().to_vec();
        rows[cell.row - 1].pop();
        if rows[cell.row - 1].is_empty() {
            rows.remove(cell.row - 1);
        }
        Syrt::from_rows(shape, rows).ok()
    }

    /// Reorders a tableau for stable output: by the row holding `n`, then by
    /// reading word.
    fn order_key(&self) -> (usize, Vec<usize>) {
        let n = self.size();
        (self.position(n).map_or(0, |c| c.row), self.reading_word())
    }
}

impl Deref for Syrt {
    type Target = Tableau;

    fn deref(&self) -> &Tableau {
        &self.0
    }
}

impl<'de> Deserialize<'de> for Syrt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Syrt::new(Tableau::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Syrt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Per-column relative order: column `k` lists, bottom to top, the rank of each
/// entry among the entries of that column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColumnSignature(pub Vec<Vec<usize>>);

impl ColumnSignature {
    /// Every column increasing: the signature of `E_0`.
    pub fn is_increasing(&self) -> bool {
        self.0
            .iter()
            .all(|col| col.iter().enumerate().all(|(i, &r)| i == r))
    }
}

/// One `∼`-class of `SYRT(α)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivalenceClass {
    pub signature: ColumnSignature,
    pub members: Vec<Syrt>,
}

/// All SYRT of shape `α`, with the default size cap.
pub fn enumerate_syrt(shape: &Composition) -> Result<Vec<Syrt>> {
    enumerate_syrt_with_limit(shape, ENUMERATION_LIMIT)
}

/// All SYRT of shape `α`, built by placing `n` in each removable cell on top
/// of the tableaux of the decremented shape.
///
/// Output is sorted by the row holding `n` (ascending), then by reading word.
pub fn enumerate_syrt_with_limit(shape: &Composition, limit: usize) -> Result<Vec<Syrt>> {
    check_limit("enumeration", shape.size(), limit)?;
    let mut out = extend_recursively(shape)?;
    out.sort_by_cached_key(Syrt::order_key);
    Ok(out)
}

fn extend_recursively(shape: &Composition) -> Result<Vec<Syrt>> {
    let n = shape.size();
    if n == 1 {
        return Ok(vec![Syrt(Tableau {
            shape: shape.clone(),
            rows: vec![vec![1]],
        })]);
    }
    let mut out = Vec::new();
    for cell in shape.removable_cells() {
        let smaller = shape
            .decrement_row(cell.row)?
            .expect("n > 1 leaves a nonempty shape");
        for t in extend_recursively(&smaller)? {
            let mut rows = t.0.rows;
            if rows.len() < shape.len() {
                rows.push(Vec::new());
            }
            rows[cell.row - 1].push(n);
            let t = Tableau {
                shape: shape.clone(),
                rows,
            };
            let t = Syrt::new(t).map_err(|e| {
                SyrtError::Internal(format!("extension by {n} at {cell} failed: {e}"))
            })?;
            out.push(t);
        }
    }
    Ok(out)
}

/// All SYRT of shape `α`, by filtering every bijective filling.
pub fn brute_force_syrt(shape: &Composition) -> Result<Vec<Syrt>> {
    let n = shape.size();
    check_limit("brute force", n, BRUTE_FORCE_LIMIT)?;
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        let mut rest = &perm[..];
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let (row, tail) = rest.split_at(len);
                rest = tail;
                row.to_vec()
            })
            .collect();
        let t = Tableau {
            shape: shape.clone(),
            rows,
        };
        if t.validate().is_ok() {
            out.push(Syrt(t));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out.sort_by_cached_key(Syrt::order_key);
    Ok(out)
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (0..a.len().saturating_sub(1)).rfind(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = a.iter().rposition(|&x| x > a[i]).expect("a[i+1] > a[i]");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// Groups tableaux by column signature. The increasing class comes first (when
/// present), the rest follow in signature order. Returns member indices.
pub fn group_by_signature(tableaux: &[Syrt]) -> Vec<(ColumnSignature, Vec<usize>)> {
    let mut groups: std::collections::BTreeMap<(bool, ColumnSignature), Vec<usize>> =
        Default::default();
    for (i, t) in tableaux.iter().enumerate() {
        let sig = t.column_signature();
        groups
            .entry((!sig.is_increasing(), sig))
            .or_default()
            .push(i);
    }
    groups.into_iter().map(|((_, sig), v)| (sig, v)).collect()
}

/// The `∼`-classes of `SYRT(α)`, `E_0` first.
pub fn equivalence_classes(shape: &Composition) -> Result<Vec<EquivalenceClass>> {
    let all = enumerate_syrt(shape)?;
    Ok(group_by_signature(&all)
        .into_iter()
        .map(|(signature, idx)| EquivalenceClass {
            signature,
            members: idx.into_iter().map(|i| all[i].clone()).collect(),
        })
        .collect())
}

/// Rows filled bottom to top with consecutive blocks `1..=α_1`, then the next
/// `α_2` integers, and so on.
pub fn row_superstandard(shape: &Composition) -> Syrt {
    let mut next = 0;
    let rows = shape
        .parts()
        .iter()
        .map(|&len| {
            let row = (next + 1..=next + len).collect();
            next += len;
            row
        })
        .collect();
    Syrt(Tableau {
        shape: shape.clone(),
        rows,
    })
}
