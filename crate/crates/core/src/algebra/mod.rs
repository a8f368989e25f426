//! Finite biquasiles: a set with two quasigroup operations `*` and `.`
//! satisfying a pair of exchange identities.
//!
//! Elements are stored 0-indexed; the text interchange format is the
//! 1-indexed `n x 2n` block matrix (star block then dot block).

mod enumerate;
mod iso;
mod subs;

pub use enumerate::{enumerate_biquasiles, EnumerateError, EnumerateOutcome};
pub use iso::{canonical_form, is_isomorphic, iso_classes, BiquasileMap};
pub use subs::{is_simple, subbiquasile_closure};

use std::fmt;
use thiserror::Error;

pub type Elt = u8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operation table is not square: {rows} rows of widths {widths:?}")]
    NotSquare { rows: usize, widths: Vec<usize> },
    #[error("entry {value} at ({row},{col}) out of range 1..={order}")]
    EntryOutOfRange { row: usize, col: usize, value: i64, order: usize },
    #[error("table is not a Latin square: duplicate in {axis} {index}")]
    NotLatin { axis: &'static str, index: usize },
    #[error("operation tables violate the biquasile identities")]
    AxiomsViolated,
    #[error("block matrix line {line}: expected {expected} entries, found {found}")]
    BadBlockWidth { line: usize, expected: usize, found: usize },
    #[error("block matrix: {0}")]
    BadBlock(String),
    #[error("empty element subset")]
    EmptySubset,
}

/// An `n x n` operation table over `{0..n-1}` (Latin square once validated).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OperationTable {
    n: usize,
    entries: Vec<Elt>,
}

impl OperationTable {
    pub fn new(n: usize, entries: Vec<Elt>) -> Result<Self, AlgebraError> {
        if entries.len() != n * n {
            return Err(AlgebraError::NotSquare { rows: n, widths: vec![entries.len()] });
        }
        for (i, &v) in entries.iter().enumerate() {
            if v as usize >= n {
                return Err(AlgebraError::EntryOutOfRange {
                    row: i / n,
                    col: i % n,
                    value: v as i64 + 1,
                    order: n,
                });
            }
        }
        Ok(OperationTable { n, entries })
    }

    /// Build from 1-indexed rows as printed in operation matrices.
    pub fn from_rows_1indexed(rows: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::NotSquare {
                rows: n,
                widths: rows.iter().map(|r| r.len()).collect(),
            });
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v < 1 || v > n as i64 {
                    return Err(AlgebraError::EntryOutOfRange { row: i, col: j, value: v, order: n });
                }
                entries.push((v - 1) as Elt);
            }
        }
        Ok(OperationTable { n, entries })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: Elt, y: Elt) -> Elt {
        self.entries[x as usize * self.n + y as usize]
    }

    pub fn entries(&self) -> &[Elt] {
        &self.entries
    }

    /// Latin square check: every row and column is a permutation.
    pub fn is_latin(&self) -> bool {
        self.latin_violation().is_none()
    }

    pub(crate) fn latin_violation(&self) -> Option<AlgebraError> {
        let n = self.n;
        for i in 0..n {
            let mut row = 0u32;
            let mut col = 0u32;
            for j in 0..n {
                row |= 1 << self.entries[i * n + j];
                col |= 1 << self.entries[j * n + i];
            }
            if row.count_ones() as usize != n {
                return Some(AlgebraError::NotLatin { axis: "row", index: i });
            }
            if col.count_ones() as usize != n {
                return Some(AlgebraError::NotLatin { axis: "column", index: i });
            }
        }
        None
    }

    /// Left-division table: `ld.get(y, w)` is the unique `x` with
    /// `self.get(y, x) = w`.
    pub fn left_division(&self) -> OperationTable {
        let n = self.n;
        let mut entries = vec![0 as Elt; n * n];
        for y in 0..n {
            for x in 0..n {
                let w = self.entries[y * n + x] as usize;
                entries[y * n + w] = x as Elt;
            }
        }
        OperationTable { n, entries }
    }

    /// Right-division table: `rd.get(w, y)` is the unique `x` with
    /// `self.get(x, y) = w`.
    pub fn right_division(&self) -> OperationTable {
        let n = self.n;
        let mut entries = vec![0 as Elt; n * n];
        for x in 0..n {
            for y in 0..n {
                let w = self.entries[x * n + y] as usize;
                entries[w * n + y] = x as Elt;
            }
        }
        OperationTable { n, entries }
    }

    /// Relabel by a permutation: `out[p(i)][p(j)] = p(in[i][j])`.
    pub fn relabeled(&self, perm: &[Elt]) -> OperationTable {
        let n = self.n;
        let mut entries = vec![0 as Elt; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[perm[i] as usize * n + perm[j] as usize] =
                    perm[self.entries[i * n + j] as usize];
            }
        }
        OperationTable { n, entries }
    }
}

/// The four derived division tables of a biquasile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divisions {
    /// `star_left.get(y, w) = y \* w`
    pub star_left: OperationTable,
    /// `star_right.get(w, y) = w /* y`
    pub star_right: OperationTable,
    /// `dot_left.get(y, w) = y \ w`
    pub dot_left: OperationTable,
    /// `dot_right.get(w, y) = w / y`
    pub dot_right: OperationTable,
}

/// A finite biquasile: two Latin operation tables satisfying the exchange
/// identities, with division tables precomputed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Biquasile {
    n: usize,
    star: OperationTable,
    dot: OperationTable,
    star_ld: OperationTable,
    star_rd: OperationTable,
    dot_ld: OperationTable,
    dot_rd: OperationTable,
}

impl Biquasile {
    pub fn from_tables(star: OperationTable, dot: OperationTable) -> Result<Self, AlgebraError> {
        if star.order() != dot.order() {
            return Err(AlgebraError::NotSquare {
                rows: star.order(),
                widths: vec![dot.order()],
            });
        }
        if let Some(e) = star.latin_violation().or_else(|| dot.latin_violation()) {
            return Err(e);
        }
        if !check_axioms(&star, &dot) {
            return Err(AlgebraError::AxiomsViolated);
        }
        Ok(Self::from_tables_unchecked(star, dot))
    }

    /// Caller guarantees Latin + axioms (used by the enumerator).
    pub(crate) fn from_tables_unchecked(star: OperationTable, dot: OperationTable) -> Self {
        let (star_ld, star_rd) = (star.left_division(), star.right_division());
        let (dot_ld, dot_rd) = (dot.left_division(), dot.right_division());
        Biquasile { n: star.order(), star, dot, star_ld, star_rd, dot_ld, dot_rd }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn star_table(&self) -> &OperationTable {
        &self.star
    }

    pub fn dot_table(&self) -> &OperationTable {
        &self.dot
    }

    pub fn divisions(&self) -> Divisions {
        Divisions {
            star_left: self.star_ld.clone(),
            star_right: self.star_rd.clone(),
            dot_left: self.dot_ld.clone(),
            dot_right: self.dot_rd.clone(),
        }
    }

    #[inline]
    pub fn star(&self, x: Elt, y: Elt) -> Elt {
        self.star.get(x, y)
    }

    #[inline]
    pub fn dot(&self, x: Elt, y: Elt) -> Elt {
        self.dot.get(x, y)
    }

    /// `y \* w`: the `x` with `y * x = w`.
    #[inline]
    pub fn star_ldiv(&self, y: Elt, w: Elt) -> Elt {
        self.star_ld.get(y, w)
    }

    /// `w /* y`: the `x` with `x * y = w`.
    #[inline]
    pub fn star_rdiv(&self, w: Elt, y: Elt) -> Elt {
        self.star_rd.get(w, y)
    }

    /// `y \ w`: the `x` with `y . x = w`.
    #[inline]
    pub fn dot_ldiv(&self, y: Elt, w: Elt) -> Elt {
        self.dot_ld.get(y, w)
    }

    /// `w / y`: the `x` with `x . y = w`.
    #[inline]
    pub fn dot_rdiv(&self, w: Elt, y: Elt) -> Elt {
        self.dot_rd.get(w, y)
    }

    pub fn check(&self) -> bool {
        check_axioms(&self.star, &self.dot)
    }

    /// Relabel every element by a permutation of `{0..n-1}`.
    pub fn relabeled(&self, perm: &[Elt]) -> Biquasile {
        Self::from_tables_unchecked(self.star.relabeled(perm), self.dot.relabeled(perm))
    }

    /// Key used for deterministic ordering: star entries then dot entries.
    pub fn lex_key(&self) -> (Vec<Elt>, Vec<Elt>) {
        (self.star.entries().to_vec(), self.dot.entries().to_vec())
    }

    /// Dehn biquasile of the cyclic group: `a . b = a + b`, `x * y = y - x`.
    pub fn dehn(m: usize) -> Biquasile {
        let star = OperationTable {
            n: m,
            entries: (0..m * m)
                .map(|i| (((i % m) + m - (i / m)) % m) as Elt)
                .collect(),
        };
        let dot = OperationTable {
            n: m,
            entries: (0..m * m).map(|i| ((i / m + i % m) % m) as Elt).collect(),
        };
        Self::from_tables_unchecked(star, dot)
    }

    /// Render as the 1-indexed `n x 2n` block matrix text format.
    pub fn to_block_text(&self) -> String {
        let n = self.n;
        let mut out = String::new();
        for i in 0..n {
            let mut cells = Vec::with_capacity(2 * n);
            for j in 0..n {
                cells.push((self.star.get(i as Elt, j as Elt) + 1).to_string());
            }
            for j in 0..n {
                cells.push((self.dot.get(i as Elt, j as Elt) + 1).to_string());
            }
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Biquasile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_block_text())
    }
}

/// Direct check of exchange identities (i) and (ii) over all quadruples:
///   (i)  a*(x.[y*(a.b)]) = (a*[x.y])*(x.[y*([a*(x.y)].b)])
///   (ii) y*([a*(x.y)].b) = (y*[a.b])*([a*(x.[y*(a.b)])].b)
pub fn check_axioms(star: &OperationTable, dot: &OperationTable) -> bool {
    let n = star.order() as Elt;
    for a in 0..n {
        for b in 0..n {
            let ab = dot.get(a, b);
            for x in 0..n {
                for y in 0..n {
                    let xy = dot.get(x, y);
                    let axy = star.get(a, xy);
                    let yab = star.get(y, ab);
                    // (i)
                    let lhs1 = star.get(a, dot.get(x, yab));
                    let rhs1 = star.get(axy, dot.get(x, star.get(y, dot.get(axy, b))));
                    if lhs1 != rhs1 {
                        return false;
                    }
                    // (ii)
                    let lhs2 = star.get(y, dot.get(axy, b));
                    let rhs2 = star.get(
                        star.get(y, ab),
                        dot.get(star.get(a, dot.get(x, yab)), b),
                    );
                    if lhs2 != rhs2 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `f_{a,b}(x,y) = x*(a.[b*(x.y)])`.
pub fn f_map(star: &OperationTable, dot: &OperationTable, a: Elt, b: Elt, x: Elt, y: Elt) -> Elt {
    star.get(x, dot.get(a, star.get(b, dot.get(x, y))))
}

/// `g_{a,b}(x,y) = y*([a*(x.y)].b)`.
pub fn g_map(star: &OperationTable, dot: &OperationTable, a: Elt, b: Elt, x: Elt, y: Elt) -> Elt {
    star.get(y, dot.get(star.get(a, dot.get(x, y)), b))
}

/// Independent second route: the identities hold iff
/// `f_{a,b}(x,y) = f_{a,b}(x*(a.b), y)` and
/// `g_{a,b}(x,y) = g_{a,b}(x, y*(a.b))` for all quadruples.
pub fn check_axioms_fg(star: &OperationTable, dot: &OperationTable) -> bool {
    let n = star.order() as Elt;
    for a in 0..n {
        for b in 0..n {
            let ab = dot.get(a, b);
            for x in 0..n {
                for y in 0..n {
                    if f_map(star, dot, a, b, x, y) != f_map(star, dot, a, b, star.get(x, ab), y) {
                        return false;
                    }
                    if g_map(star, dot, a, b, x, y) != g_map(star, dot, a, b, x, star.get(y, ab)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Parse one or more biquasiles from block-matrix text: each structure is
/// `n` lines of `2n` space-separated 1-indexed entries; structures are
/// separated by blank lines; `#` starts a comment.
pub fn parse_block_matrices(text: &str) -> Result<Vec<Biquasile>, AlgebraError> {
    let mut groups: Vec<Vec<(usize, Vec<i64>)>> = vec![Vec::new()];
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            if !groups.last().unwrap().is_empty() {
                groups.push(Vec::new());
            }
            continue;
        }
        let nums: Result<Vec<i64>, _> = line.split_whitespace().map(|t| t.parse()).collect();
        let nums = nums.map_err(|_| {
            AlgebraError::BadBlock(format!("line {}: non-integer entry", lineno + 1))
        })?;
        groups.last_mut().unwrap().push((lineno + 1, nums));
    }
    let mut out = Vec::new();
    for rows in groups.into_iter().filter(|g| !g.is_empty()) {
        let n = rows.len();
        let mut star_rows = Vec::with_capacity(n);
        let mut dot_rows = Vec::with_capacity(n);
        for (lineno, row) in rows {
            if row.len() != 2 * n {
                return Err(AlgebraError::BadBlockWidth {
                    line: lineno,
                    expected: 2 * n,
                    found: row.len(),
                });
            }
            star_rows.push(row[..n].to_vec());
            dot_rows.push(row[n..].to_vec());
        }
        let star = OperationTable::from_rows_1indexed(&star_rows)?;
        let dot = OperationTable::from_rows_1indexed(&dot_rows)?;
        out.push(Biquasile::from_tables(star, dot)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_4_2() -> Biquasile {
        // star rows 3 2 1 / 2 1 3 / 1 3 2, dot rows 3 1 2 / 1 2 3 / 2 3 1
        let star = OperationTable::from_rows_1indexed(&[
            vec![3, 2, 1],
            vec![2, 1, 3],
            vec![1, 3, 2],
        ])
        .unwrap();
        let dot = OperationTable::from_rows_1indexed(&[
            vec![3, 1, 2],
            vec![1, 2, 3],
            vec![2, 3, 1],
        ])
        .unwrap();
        Biquasile::from_tables(star, dot).unwrap()
    }

    #[test]
    fn latin_checks() {
        let t = OperationTable::from_rows_1indexed(&[
            vec![3, 2, 1],
            vec![2, 1, 3],
            vec![1, 3, 2],
        ])
        .unwrap();
        assert!(t.is_latin());
        let c = OperationTable::new(2, vec![0, 0, 0, 0]).unwrap();
        assert!(!c.is_latin());
        // entry out of range is an input error, not merely "false"
        assert!(matches!(
            OperationTable::from_rows_1indexed(&[vec![1, 3], vec![2, 1]]),
            Err(AlgebraError::EntryOutOfRange { .. })
        ));
        assert!(Biquasile::dehn(3).dot_table().is_latin());
    }

    #[test]
    fn example_structure_satisfies_axioms() {
        let x = example_4_2();
        assert!(x.check());
        assert!(check_axioms_fg(x.star_table(), x.dot_table()));
    }

    #[test]
    fn swapped_entries_violate_axioms() {
        // swapping the first two entries of the star table breaks the
        // identities (found by scanning all quadruples)
        let star = OperationTable::from_rows_1indexed(&[
            vec![2, 3, 1],
            vec![2, 1, 3],
            vec![1, 3, 2],
        ])
        .unwrap();
        let dot = example_4_2().dot_table().clone();
        assert!(!check_axioms(&star, &dot));
        assert!(!check_axioms_fg(&star, &dot));
    }

    #[test]
    fn dehn_biquasiles_satisfy_axioms() {
        for m in 1..=12 {
            let x = Biquasile::dehn(m);
            assert!(x.check(), "dehn({}) fails axioms", m);
        }
    }

    #[test]
    fn dehn_divisions_match_closed_forms() {
        let m = 7usize;
        let x = Biquasile::dehn(m);
        for a in 0..m as Elt {
            for b in 0..m as Elt {
                // x \* y = x + y ; a / b = a - b
                assert_eq!(x.star_ldiv(a, b), ((a as usize + b as usize) % m) as Elt);
                assert_eq!(
                    x.dot_rdiv(a, b),
                    ((a as usize + m - b as usize) % m) as Elt
                );
            }
        }
    }

    #[test]
    fn division_laws() {
        let x = example_4_2();
        let n = x.order() as Elt;
        for a in 0..n {
            for b in 0..n {
                assert_eq!(x.star_ldiv(a, x.star(a, b)), b);
                assert_eq!(x.star_rdiv(x.star(a, b), b), a);
                assert_eq!(x.dot_ldiv(a, x.dot(a, b)), b);
                assert_eq!(x.dot_rdiv(x.dot(a, b), b), a);
            }
        }
        // defining-law instance: y \* (y * 1) = 1 (0-indexed element 0)
        for y in 0..n {
            assert_eq!(x.star_ldiv(y, x.star(y, 0)), 0);
        }
    }

    #[test]
    fn block_text_round_trip() {
        let x = example_4_2();
        let text = x.to_block_text();
        let parsed = parse_block_matrices(&text).unwrap();
        assert_eq!(parsed.len(), 1);
        assert_eq!(parsed[0], x);
        // with comments and blank lines
        let doubled = format!("# two structures\n{}\n\n{}", text, text);
        assert_eq!(parse_block_matrices(&doubled).unwrap().len(), 2);
    }
}
