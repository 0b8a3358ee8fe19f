//! Binary relations on a finite ground set `{1..n}`, stored as dense
//! packed-bit incidence rows.
//!
//! All operations are value-semantic: every method returns a fresh
//! [`Relation`]. Binary operations require equal ground-set sizes and
//! report [`Error::DimensionMismatch`] otherwise. The `&a * &b` operator is
//! provided for composition in contexts where the sizes are known to agree;
//! it panics on mismatch.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{check_dims, Error, Result};

const WORD: usize = 64;

/// A binary relation on `{1..n}`. Indices in the API are zero-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    n: usize,
    stride: usize,
    bits: Box<[u64]>,
}

/// The three distinguished constants of `B_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationConstant {
    Identity,
    Universal,
    Empty,
}

fn stride_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Mask of the valid bits in word `w` of a row of length `n`.
fn word_mask(n: usize, w: usize) -> u64 {
    let used = n - w * WORD;
    if used >= WORD {
        u64::MAX
    } else {
        (1u64 << used) - 1
    }
}

impl Relation {
    /// The empty relation on `n` points.
    pub fn empty(n: usize) -> Self {
        let stride = stride_for(n);
        Relation {
            n,
            stride,
            bits: vec![0; n * stride].into_boxed_slice(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            r.insert(i, i);
        }
        r
    }

    pub fn universal(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            for w in 0..r.stride {
                r.bits[i * r.stride + w] = word_mask(n, w);
            }
        }
        r
    }

    pub fn constant(kind: RelationConstant, n: usize) -> Self {
        match kind {
            RelationConstant::Identity => Self::identity(n),
            RelationConstant::Universal => Self::universal(n),
            RelationConstant::Empty => Self::empty(n),
        }
    }

    /// Builds a relation from a predicate on zero-based pairs.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    r.insert(i, j);
                }
            }
        }
        r
    }

    /// Builds a relation from zero-based pairs. Panics if a pair is out of range.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Self::empty(n);
        for (i, j) in pairs {
            assert!(i < n && j < n, "pair ({i}, {j}) out of range for n = {n}");
            r.insert(i, j);
        }
        r
    }

    /// Decodes the row-major code of a relation: the matrix rows read as one
    /// binary numeral, entry `(0,0)` most significant. Requires `n*n <= 64`.
    pub fn from_code(n: usize, code: u64) -> Self {
        let cells = n * n;
        assert!(cells <= 64, "row-major code needs n*n <= 64, got n = {n}");
        Self::from_fn(n, |i, j| (code >> (cells - 1 - (i * n + j))) & 1 == 1)
    }

    /// Inverse of [`Relation::from_code`]; `None` when `n*n > 64`.
    pub fn code(&self) -> Option<u64> {
        let cells = self.n * self.n;
        if cells > 64 {
            return None;
        }
        let mut code = 0u64;
        for i in 0..self.n {
            for j in 0..self.n {
                code = (code << 1) | u64::from(self.contains(i, j));
            }
        }
        Some(code)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        (self.bits[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    fn insert(&mut self, i: usize, j: usize) {
        self.bits[i * self.stride + j / WORD] |= 1u64 << (j % WORD);
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    /// Number of pairs in the relation.
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Iterates the pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| {
            (0..self.n)
                .filter(move |&j| self.contains(i, j))
                .map(move |j| (i, j))
        })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Result<Self> {
        check_dims(self.n, other.n)?;
        let bits = self
            .bits
            .iter()
            .zip(other.bits.iter())
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Relation {
            n: self.n,
            stride: self.stride,
            bits,
        })
    }

    /// Relational composition: `(x,z)` is related iff `x self y` and `y other z`
    /// for some `y`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_dims(self.n, other.n)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::empty(self.n);
        let stride = self.stride;
        for i in 0..self.n {
            let row = self.row(i);
            let (lo, hi) = (i * stride, (i + 1) * stride);
            for (w, &word) in row.iter().enumerate() {
                let mut word = word;
                while word != 0 {
                    let y = w * WORD + word.trailing_zeros() as usize;
                    word &= word - 1;
                    for (dst, &src) in out.bits[lo..hi].iter_mut().zip(other.row(y)) {
                        *dst |= src;
                    }
                }
            }
        }
        out
    }

    pub fn converse(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.contains(j, i))
    }

    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            for w in 0..self.stride {
                let k = i * self.stride + w;
                out.bits[k] = !out.bits[k] & word_mask(self.n, w);
            }
        }
        out
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a & b)
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        check_dims(self.n, other.n)?;
        Ok(self.is_subset_unchecked(other))
    }

    pub(crate) fn is_subset_unchecked(&self, other: &Self) -> bool {
        self.bits
            .iter()
            .zip(other.bits.iter())
            .all(|(&a, &b)| a & !b == 0)
    }

    /// Reflexive and transitive.
    pub fn is_preorder(&self) -> bool {
        Relation::identity(self.n).is_subset_unchecked(self)
            && self.compose_unchecked(self).is_subset_unchecked(self)
    }

    /// Every row and every column holds at most one pair.
    pub fn is_partial_injection(&self) -> bool {
        self.row_col_counts().all(|(r, c)| r <= 1 && c <= 1)
    }

    /// Every row and every column holds exactly one pair.
    pub fn is_permutation(&self) -> bool {
        self.row_col_counts().all(|(r, c)| r == 1 && c == 1)
    }

    fn row_col_counts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).map(move |k| {
            let row = self.row(k).iter().map(|w| w.count_ones() as usize).sum();
            let col = (0..self.n).filter(|&i| self.contains(i, k)).count();
            (row, col)
        })
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose_unchecked(self) == *self
    }
}

/// All relations of `B_n` in ascending row-major code order.
/// Requires `n*n < 64`.
pub fn all_relations(n: usize) -> impl Iterator<Item = Relation> {
    let cells = n * n;
    assert!(cells < 64, "cannot enumerate B_{n}");
    (0..1u64 << cells).map(move |code| Relation::from_code(n, code))
}

impl Mul for &Relation {
    type Output = Relation;

    /// Composition. Panics on a dimension mismatch; use
    /// [`Relation::compose`] for a fallible version.
    fn mul(self, rhs: &Relation) -> Relation {
        assert_eq!(self.n, rhs.n, "composing relations of different sizes");
        self.compose_unchecked(rhs)
    }
}

/// The `⊆`-greatest `ξ` with `b ξ ⊆ a`, namely `(b⁻¹ aᶜ)ᶜ`.
pub fn max_right_solution(b: &Relation, a: &Relation) -> Result<Relation> {
    check_dims(b.n, a.n)?;
    Ok(b.converse().compose_unchecked(&a.complement()).complement())
}

/// The `⊆`-greatest `ξ` with `ξ b ⊆ a`, namely `(aᶜ b⁻¹)ᶜ`.
pub fn max_left_solution(b: &Relation, a: &Relation) -> Result<Relation> {
    check_dims(b.n, a.n)?;
    Ok(a.complement().compose_unchecked(&b.converse()).complement())
}

/// Whether `b ξ = a` has a solution `ξ`.
pub fn divides_right(b: &Relation, a: &Relation) -> Result<bool> {
    let r = max_right_solution(b, a)?;
    Ok(b.compose_unchecked(&r) == *a)
}

/// Whether `ξ b = a` has a solution `ξ`.
pub fn divides_left(b: &Relation, a: &Relation) -> Result<bool> {
    let l = max_left_solution(b, a)?;
    Ok(l.compose_unchecked(b) == *a)
}

impl fmt::Display for Relation {
    /// The text format: `n` on the first line, then one line of `0`/`1`
    /// characters per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                f.write_str(if self.contains(i, j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation({})", self.to_compact())
    }
}

impl Relation {
    /// Rows joined by `/`, e.g. `01/00`. Used in reports and witnesses.
    pub fn to_compact(&self) -> String {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| if self.contains(i, j) { '1' } else { '0' })
                    .collect()
            })
            .collect();
        if rows.is_empty() {
            "-".to_string()
        } else {
            rows.join("/")
        }
    }

    /// Parses the `/`-separated compact form produced by [`Relation::to_compact`].
    pub fn from_compact(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Relation::empty(0));
        }
        let rows: Vec<&str> = s.split('/').collect();
        parse_rows(rows.len(), &rows)
    }
}

fn parse_rows(n: usize, rows: &[&str]) -> Result<Relation> {
    if rows.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} rows, found {}",
            rows.len()
        )));
    }
    let mut r = Relation::empty(n);
    for (i, row) in rows.iter().enumerate() {
        let row = row.trim_end_matches('\r');
        if row.chars().count() != n {
            return Err(Error::Parse(format!(
                "row {} has length {}, expected {n}",
                i + 1,
                row.chars().count()
            )));
        }
        for (j, c) in row.chars().enumerate() {
            match c {
                '1' => r.insert(i, j),
                '0' => {}
                other => {
                    return Err(Error::Parse(format!(
                        "row {}: unexpected character {other:?}",
                        i + 1
                    )))
                }
            }
        }
    }
    Ok(r)
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing size line".into()))?;
        let n: usize = header
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad size line {header:?}")))?;
        let mut rows: Vec<&str> = lines.collect();
        while rows.last().is_some_and(|l| l.trim().is_empty()) {
            rows.pop();
        }
        parse_rows(n, &rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(s: &str) -> Relation {
        Relation::from_compact(s).unwrap()
    }

    fn b2() -> Vec<Relation> {
        all_relations(2).collect()
    }

    #[test]
    fn constants() {
        assert_eq!(Relation::identity(2), rel("10/01"));
        assert_eq!(Relation::universal(2), rel("11/11"));
        assert_eq!(Relation::empty(0), Relation::identity(0));
        assert_eq!(Relation::universal(0), Relation::identity(0));
        assert_eq!(Relation::universal(70).len(), 4900);
    }

    #[test]
    fn compose_examples() {
        let id = Relation::identity(2);
        for a in b2() {
            assert_eq!(id.compose(&a).unwrap(), a);
        }
        assert_eq!(rel("01/00").compose(&rel("00/10")).unwrap(), rel("10/00"));
        let w = Relation::universal(2);
        assert_eq!(&w * &w, w);
        assert!(matches!(
            id.compose(&Relation::identity(3)),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn compose_matches_definition_across_word_boundary() {
        let n = 70;
        let a = Relation::from_fn(n, |i, j| (i * 7 + j * 3) % 11 == 0);
        let b = Relation::from_fn(n, |i, j| (i + 2 * j) % 13 == 1);
        let c = &a * &b;
        for x in 0..n {
            for z in 0..n {
                let expect = (0..n).any(|y| a.contains(x, y) && b.contains(y, z));
                assert_eq!(c.contains(x, z), expect);
            }
        }
    }

    #[test]
    fn converse_and_complement() {
        assert_eq!(rel("01/00").converse(), rel("00/10"));
        assert_eq!(Relation::identity(2).converse(), Relation::identity(2));
        for a in b2() {
            for b in b2() {
                assert_eq!((&a * &b).converse(), &b.converse() * &a.converse());
            }
        }
        assert_eq!(Relation::identity(2).complement(), rel("01/10"));
        assert_eq!(Relation::empty(2).complement(), Relation::universal(2));
        assert_eq!(rel("10/00").complement(), rel("01/11"));
        let big = Relation::from_fn(70, |i, j| i < j);
        assert_eq!(big.complement().complement(), big);
        assert_eq!(big.complement().len(), 4900 - big.len());
    }

    #[test]
    fn subset_union_intersect() {
        let w = Relation::universal(2);
        let id = Relation::identity(2);
        for a in b2() {
            assert!(Relation::empty(2).is_subset(&a).unwrap());
            assert!(a.is_subset(&w).unwrap());
            assert_eq!(a.intersect(&w).unwrap(), a);
        }
        assert!(!id.is_subset(&rel("01/10")).unwrap());
        assert_eq!(id.union(&rel("01/10")).unwrap(), w);
        assert_eq!(id.intersect(&rel("01/10")).unwrap(), Relation::empty(2));
        assert!(id.union(&Relation::identity(1)).is_err());
    }

    #[test]
    fn residual_examples() {
        let w = Relation::universal(2);
        let id = Relation::identity(2);
        for a in b2() {
            assert_eq!(max_right_solution(&id, &a).unwrap(), a);
            assert_eq!(max_left_solution(&id, &a).unwrap(), a);
            assert!(divides_right(&id, &a).unwrap());
            assert!(divides_left(&id, &a).unwrap());
        }
        assert_eq!(max_right_solution(&w, &w).unwrap(), w);
        assert_eq!(
            max_left_solution(&w, &Relation::empty(2)).unwrap(),
            Relation::empty(2)
        );
        let e = Relation::empty(2);
        assert!(divides_right(&e, &e).unwrap());
        assert!(divides_left(&e, &e).unwrap());
    }

    #[test]
    fn divisibility_agrees_with_search() {
        let all = b2();
        for a in &all {
            for b in &all {
                let right = all.iter().any(|x| &(b * x) == a);
                let left = all.iter().any(|x| &(x * b) == a);
                assert_eq!(divides_right(b, a).unwrap(), right, "{b:?} | {a:?}");
                assert_eq!(divides_left(b, a).unwrap(), left, "{a:?} | {b:?}");
            }
        }
    }

    #[test]
    fn structural_predicates() {
        let w = Relation::universal(2);
        let id = Relation::identity(2);
        assert!(w.is_preorder() && id.is_preorder());
        assert!(!rel("01/00").is_preorder());
        assert!(id.is_partial_injection() && id.is_permutation());
        assert!(rel("10/00").is_partial_injection() && !rel("10/00").is_permutation());
        assert!(!w.is_partial_injection() && !w.is_permutation());
        assert!(Relation::empty(0).is_permutation());
    }

    #[test]
    fn codes_are_row_major() {
        assert_eq!(rel("10/00").code(), Some(0b1000));
        assert_eq!(rel("00/01").code(), Some(0b0001));
        for (k, r) in all_relations(2).enumerate() {
            assert_eq!(r.code(), Some(k as u64));
        }
        assert_eq!(all_relations(1).count(), 2);
        assert_eq!(Relation::universal(9).code(), None);
    }

    #[test]
    fn text_format() {
        let r: Relation = "2\n01\n00\n".parse().unwrap();
        assert_eq!(r, rel("01/00"));
        assert_eq!(r.to_string(), "2\n01\n00\n");
        assert_eq!("0\n".parse::<Relation>().unwrap(), Relation::empty(0));
        assert!("2\n01\n0\n".parse::<Relation>().is_err());
        assert!("2\n01\n".parse::<Relation>().is_err());
        assert!("2\n01\n0x\n".parse::<Relation>().is_err());
        assert!("x\n".parse::<Relation>().is_err());
        assert!("".parse::<Relation>().is_err());
    }
}
