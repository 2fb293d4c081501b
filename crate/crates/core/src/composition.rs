//! Compositions, their diagrams, and the cell machinery built on them.
//!
//! Diagrams use French notation: row 1 is the bottom row and cells are
//! addressed as 1-based `(col, row)` pairs.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SyrtError};
use crate::tableau::{Syrt, Tableau};

/// Largest `|α|` any operation accepts.
pub const MAX_SIZE: usize = 20;

/// A finite sequence of positive integers.
///
/// Ordering is by length first, then lexicographic on the parts. This is the
/// canonical key order used when serialising quasisymmetric elements.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(SyrtError::Domain("a composition needs at least one part".into()));
        }
        if let Some(p) = parts.iter().position(|&p| p == 0) {
            return Err(SyrtError::Domain(format!("part {} is zero", p + 1)));
        }
        let size: usize = parts.iter().sum();
        crate::error::check_limit("composition", size, MAX_SIZE)?;
        Ok(Composition(parts))
    }

    /// The composition `(n)`.
    pub fn row(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts, `ℓ(α)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts, `|α|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max_part(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Length of the 1-based row `row`, or 0 above the diagram.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Cells of `D(α)`, bottom row first, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(c, r + 1)))
    }

    /// Rows of `D(α)` that reach column `col`, bottom to top.
    pub fn column_rows(&self, col: usize) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(move |(_, &len)| len >= col)
            .map(|(r, _)| r + 1)
    }

    /// `S(α)`: the partial sums `α_1, α_1+α_2, …` omitting the total.
    pub fn subset(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        self.0[..self.0.len() - 1]
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// `comp_n(S)`, the inverse of [`Composition::subset`].
    pub fn from_subset(subset: &BTreeSet<usize>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(SyrtError::Domain("n must be positive".into()));
        }
        if let Some(&bad) = subset.iter().find(|&&s| s == 0 || s >= n) {
            return Err(SyrtError::Domain(format!(
                "element {bad} is outside 1..={}",
                n - 1
            )));
        }
        let mut parts = Vec::with_capacity(subset.len() + 1);
        let mut prev = 0;
        for &s in subset {
            parts.push(s - prev);
            prev = s;
        }
        parts.push(n - prev);
        Self::new(parts)
    }

    /// True iff `self` refines `coarser`, i.e. `coarser` is obtained by summing
    /// consecutive parts of `self`.
    pub fn refines(&self, coarser: &Composition) -> bool {
        self.size() == coarser.size() && coarser.subset().is_subset(&self.subset())
    }

    /// Removable cells, sorted by row.
    ///
    /// The rightmost cell of the top row is always removable; the rightmost
    /// cell of a lower row of length at least two is removable unless some
    /// higher row is exactly one cell shorter.
    pub fn removable_cells(&self) -> Vec<Cell> {
        let k = self.len();
        let mut cells = Vec::new();
        for (i, &len) in self.0.iter().enumerate() {
            let top = i + 1 == k;
            let blocked = self.0[i + 1..].iter().any(|&above| above + 1 == len);
            if top || (len >= 2 && !blocked) {
                cells.push(Cell::new(len, i + 1));
            }
        }
        cells
    }

    /// Simplicity: whenever `α_j ≥ α_i ≥ 2` with `i < j`, some `α_k` with
    /// `i ≤ k ≤ j` equals `α_i - 1`.
    pub fn is_simple(&self) -> bool {
        let a = &self.0;
        (0..a.len()).all(|i| {
            a[i] < 2
                || (i + 1..a.len())
                    .filter(|&j| a[j] >= a[i])
                    .all(|j| a[i..=j].iter().any(|&p| p + 1 == a[i]))
        })
    }

    /// Removes one cell from the end of `row`, deleting the row when it empties.
    ///
    /// Returns `None` when the result would have no cells.
    pub fn decrement_row(&self, row: usize) -> Result<Option<Composition>> {
        if row == 0 || row > self.len() {
            return Err(SyrtError::Domain(format!(
                "row {row} is outside 1..={}",
                self.len()
            )));
        }
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.remove(row - 1);
        }
        if parts.is_empty() {
            Ok(None)
        } else {
            Ok(Some(Composition(parts)))
        }
    }

    /// Boundary cells in their total order: up the first column, then by column.
    ///
    /// A cell outside column 1 is a boundary cell when nothing lies strictly
    /// above it in its own column or in the column to its left. Two such cells
    /// never share a column (the lower would have the upper above it), so the
    /// order is total without a tie-break.
    pub fn boundary_cells(&self) -> Vec<Cell> {
        let highest = |col: usize| self.column_rows(col).last().unwrap_or(0);
        let mut cells: Vec<Cell> = (1..=self.len()).map(|r| Cell::new(1, r)).collect();
        for col in 2..=self.max_part() {
            for row in self.column_rows(col) {
                if highest(col) <= row && highest(col - 1) <= row {
                    cells.push(Cell::new(col, row));
                }
            }
        }
        cells
    }

    /// Partitions `D(α)` into threads, one per boundary cell.
    ///
    /// Each thread starts at its boundary cell and repeatedly steps to the
    /// highest unthreaded cell strictly below, one column to the right.
    pub fn threads(&self) -> ThreadDecomposition {
        let mut threaded: HashSet<Cell> = HashSet::new();
        let mut threads = Vec::new();
        for start in self.boundary_cells() {
            let mut thread = vec![start];
            threaded.insert(start);
            let mut cur = start;
            while let Some(next) = self
                .column_rows(cur.col + 1)
                .filter(|&r| r < cur.row)
                .map(|r| Cell::new(cur.col + 1, r))
                .filter(|c| !threaded.contains(c))
                .last()
            {
                threaded.insert(next);
                thread.push(next);
                cur = next;
            }
            threads.push(thread);
        }
        ThreadDecomposition { threads }
    }

    /// Fills the threads in order with consecutive blocks of integers, each
    /// block placed right to left along its thread.
    pub fn t_sup(&self) -> Syrt {
        let mut rows: Vec<Vec<usize>> = self.0.iter().map(|&len| vec![0; len]).collect();
        let mut next = 0;
        for thread in &self.threads().threads {
            let len = thread.len();
            for (j, cell) in thread.iter().enumerate() {
                rows[cell.row - 1][cell.col - 1] = next + len - j;
            }
            next += len;
        }
        let tableau = Tableau::new(self.clone(), rows).expect("threads partition the diagram");
        Syrt::new(tableau).expect("thread filling satisfies the row-strict axioms")
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = SyrtError;

    /// Parses comma-separated positive integers such as `3,2,2`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| SyrtError::Parse(format!("`{p}` is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts).map_err(|e| match e {
            SyrtError::Domain(msg) => SyrtError::Parse(msg),
            other => other,
        })
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Composition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All compositions of `n`, in lexicographic order of their parts.
pub fn compositions_of(n: usize) -> Result<Vec<Composition>> {
    crate::error::check_limit("composition", n, MAX_SIZE)?;
    if n == 0 {
        return Err(SyrtError::Domain("n must be positive".into()));
    }
    let mut all: Vec<Composition> = (0u32..1 << (n - 1))
        .map(|mask| {
            let subset = (1..n).filter(|&s| mask & (1 << (s - 1)) != 0).collect();
            Composition::from_subset(&subset, n).expect("subset lies in 1..n")
        })
        .collect();
    all.sort_by(|a, b| a.parts().cmp(b.parts()));
    Ok(all)
}

/// A cell `(col, row)` of a diagram, both 1-based.
///
/// Serialises as the pair `[col, row]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub const fn new(col: usize, row: usize) -> Self {
        Cell { col, row }
    }

    /// Weakly south-west: not right of and not above `other`.
    pub fn weakly_southwest_of(&self, other: &Cell) -> bool {
        self.col <= other.col && self.row <= other.row
    }
}

impl From<[usize; 2]> for Cell {
    fn from([col, row]: [usize; 2]) -> Self {
        Cell { col, row }
    }
}

impl From<Cell> for [usize; 2] {
    fn from(c: Cell) -> Self {
        [c.col, c.row]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// Threads of a diagram, in boundary-cell order. Each thread lists its cells
/// left to right.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ThreadDecomposition {
    pub threads: Vec<Vec<Cell>>,
}

impl ThreadDecomposition {
    /// Thread index (0-based) of every cell.
    pub fn labels(&self) -> std::collections::HashMap<Cell, usize> {
        self.threads
            .iter()
            .enumerate()
            .flat_map(|(k, t)| t.iter().map(move |&c| (c, k)))
            .collect()
    }
}
