//! Degree vectors in Z^n under the componentwise order, intervals [a,b],
//! variable index sets, and the box combinatorics relative to a bounding
//! degree g: the set Z_b of variables maxed out at g, its size rho(b), and
//! the corner set G[a,b].
//!
//! All arithmetic is exact machine-integer arithmetic with overflow checks;
//! variables are identified by 1-based indices everywhere, names only matter
//! at the I/O layer.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// A multidegree: a point of Z^n.
///
/// `PartialOrd` is the componentwise order, so `partial_cmp` returning
/// `None` means the degrees are incomparable. Operands of every binary
/// operation must have equal lengths; mixing lengths is a programming error
/// and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeVector(Vec<i64>);

impl DegreeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        DegreeVector(coords)
    }

    pub fn zero(n: usize) -> Self {
        DegreeVector(vec![0; n])
    }

    /// The standard basis vector e_j, with `j` 1-based.
    pub fn unit(n: usize, j: usize) -> Self {
        assert!(j >= 1 && j <= n, "variable index {j} out of 1..={n}");
        let mut v = vec![0; n];
        v[j - 1] = 1;
        DegreeVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.assert_same_len(other);
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn plus(&self, other: &Self) -> Self {
        self.assert_same_len(other);
        DegreeVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("degree coordinate overflow"))
                .collect(),
        )
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.assert_same_len(other);
        DegreeVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_sub(*b).expect("degree coordinate overflow"))
                .collect(),
        )
    }

    pub fn meet(&self, other: &Self) -> Self {
        self.assert_same_len(other);
        DegreeVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn join(&self, other: &Self) -> Self {
        self.assert_same_len(other);
        DegreeVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Total order extending the componentwise order: lexicographic with the
    /// first coordinate most significant. Used for canonical sorting.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.assert_same_len(other);
        self.0.cmp(&other.0)
    }

    fn assert_same_len(&self, other: &Self) {
        assert_eq!(
            self.0.len(),
            other.0.len(),
            "degree vectors of different lengths: {} vs {}",
            self.0.len(),
            other.0.len()
        );
    }
}

impl Index<usize> for DegreeVector {
    type Output = i64;

    /// 0-based coordinate access.
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl PartialOrd for DegreeVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.assert_same_len(other);
        let mut ord = Ordering::Equal;
        for (a, b) in self.0.iter().zip(&other.0) {
            match (ord, a.cmp(b)) {
                (_, Ordering::Equal) => {}
                (Ordering::Equal, c) => ord = c,
                (o, c) if o == c => {}
                _ => return None,
            }
        }
        Some(ord)
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Componentwise meet and join of a pair, as one call.
pub fn meet_join(a: &DegreeVector, b: &DegreeVector) -> (DegreeVector, DegreeVector) {
    (a.meet(b), a.join(b))
}

/// An interval [a,b] = { c : a <= c <= b } in the componentwise order.
/// Both corners are nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lower: DegreeVector,
    upper: DegreeVector,
}

impl Interval {
    pub fn new(lower: DegreeVector, upper: DegreeVector) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                expected: lower.len(),
                got: upper.len(),
            });
        }
        if !lower.is_nonnegative() {
            return Err(Error::Domain(format!(
                "interval lower corner {lower} has a negative coordinate"
            )));
        }
        if !lower.le(&upper) {
            return Err(Error::Domain(format!(
                "interval corners out of order: {lower} is not <= {upper}"
            )));
        }
        Ok(Interval { lower, upper })
    }

    pub fn lower(&self) -> &DegreeVector {
        &self.lower
    }

    pub fn upper(&self) -> &DegreeVector {
        &self.upper
    }

    pub fn n(&self) -> usize {
        self.lower.len()
    }

    /// Number of lattice points, prod (b_j - a_j + 1).
    pub fn mass(&self) -> u64 {
        let mut m: u64 = 1;
        for (a, b) in self.lower.as_slice().iter().zip(self.upper.as_slice()) {
            m = m
                .checked_mul((b - a + 1) as u64)
                .expect("interval mass overflow");
        }
        m
    }

    pub fn contains(&self, c: &DegreeVector) -> bool {
        self.lower.le(c) && c.le(&self.upper)
    }

    pub fn points(&self) -> BoxIter {
        sub_box_iter(&self.lower, &self.upper)
    }

    /// Canonical total order: (lower, upper) lexicographically.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.lower
            .lex_cmp(&other.lower)
            .then_with(|| self.upper.lex_cmp(&other.upper))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lower, self.upper)
    }
}

/// A set of variable indices drawn from {1, ..., n}, n <= 64.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet {
    bits: u64,
}

impl VarSet {
    pub const MAX_VARS: usize = 64;

    pub fn empty() -> Self {
        VarSet { bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_VARS);
        VarSet {
            bits: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        }
    }

    /// Builds a set from 1-based indices; rejects indices outside 1..=n and
    /// duplicates.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I, n: usize) -> Result<Self> {
        if n > Self::MAX_VARS {
            return Err(Error::Domain(format!(
                "variable count {n} exceeds the limit {}",
                Self::MAX_VARS
            )));
        }
        let mut bits = 0u64;
        for j in indices {
            if j < 1 || j > n {
                return Err(Error::Domain(format!(
                    "variable index {j} out of range 1..={n}"
                )));
            }
            let bit = 1u64 << (j - 1);
            if bits & bit != 0 {
                return Err(Error::Domain(format!("duplicate variable index {j}")));
            }
            bits |= bit;
        }
        Ok(VarSet { bits })
    }

    pub fn insert(&mut self, j: usize) {
        assert!((1..=Self::MAX_VARS).contains(&j));
        self.bits |= 1 << (j - 1);
    }

    pub fn contains(&self, j: usize) -> bool {
        (1..=Self::MAX_VARS).contains(&j) && self.bits & (1 << (j - 1)) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Ascending 1-based indices.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=Self::MAX_VARS).filter(move |j| self.contains(*j))
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VarSet {
    /// Arbitrary total order (by bit pattern), for canonical sorting only.
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, j) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, "}}")
    }
}

/// Z_b relative to g: the variables j with b_j = g_j. Requires b <= g.
pub fn z_set(b: &DegreeVector, g: &DegreeVector) -> Result<VarSet> {
    if b.len() != g.len() {
        return Err(Error::DimensionMismatch {
            expected: g.len(),
            got: b.len(),
        });
    }
    if !b.le(g) {
        return Err(Error::Domain(format!(
            "{b} is not <= the bounding degree {g}"
        )));
    }
    Ok(z_set_in_box(b, g))
}

pub(crate) fn z_set_in_box(b: &DegreeVector, g: &DegreeVector) -> VarSet {
    debug_assert!(b.le(g));
    let mut vs = VarSet::empty();
    for j in 0..b.len() {
        if b[j] == g[j] {
            vs.insert(j + 1);
        }
    }
    vs
}

/// rho(b) = |Z_b| relative to g.
pub fn rho(b: &DegreeVector, g: &DegreeVector) -> Result<usize> {
    Ok(z_set(b, g)?.len())
}

pub(crate) fn rho_in_box(b: &DegreeVector, g: &DegreeVector) -> usize {
    z_set_in_box(b, g).len()
}

/// G[a,b] relative to g: the points c in [a,b] with c_j = a_j for every j
/// with b_j = g_j, in lexicographic order. Requires b <= g.
pub fn g_set(iv: &Interval, g: &DegreeVector) -> Result<Vec<DegreeVector>> {
    if iv.n() != g.len() {
        return Err(Error::DimensionMismatch {
            expected: g.len(),
            got: iv.n(),
        });
    }
    if !iv.upper().le(g) {
        return Err(Error::Domain(format!(
            "interval upper corner {} is not <= the bounding degree {g}",
            iv.upper()
        )));
    }
    let a = iv.lower();
    let b = iv.upper();
    let hi = DegreeVector::new(
        (0..g.len())
            .map(|j| if b[j] == g[j] { a[j] } else { b[j] })
            .collect(),
    );
    Ok(sub_box_iter(a, &hi).collect())
}

/// Iterates the lattice points of [0,g] in lexicographic order (first
/// coordinate most significant); a linear extension of the componentwise
/// order.
pub fn box_iter(g: &DegreeVector) -> BoxIter {
    sub_box_iter(&DegreeVector::zero(g.len()), g)
}

/// Iterates the lattice points of [lo,hi] in lexicographic order; empty when
/// lo <= hi fails.
pub fn sub_box_iter(lo: &DegreeVector, hi: &DegreeVector) -> BoxIter {
    assert_eq!(lo.len(), hi.len(), "box corners of different lengths");
    let next = if lo.le(hi) {
        Some(lo.as_slice().to_vec())
    } else {
        None
    };
    BoxIter {
        lo: lo.as_slice().to_vec(),
        hi: hi.as_slice().to_vec(),
        next,
    }
}

pub struct BoxIter {
    lo: Vec<i64>,
    hi: Vec<i64>,
    next: Option<Vec<i64>>,
}

impl Iterator for BoxIter {
    type Item = DegreeVector;

    fn next(&mut self) -> Option<DegreeVector> {
        let cur = self.next.take()?;
        let out = DegreeVector::new(cur.clone());
        let mut cur = cur;
        // Odometer increment, last coordinate fastest.
        for j in (0..cur.len()).rev() {
            if cur[j] < self.hi[j] {
                cur[j] += 1;
                self.next = Some(cur);
                return Some(out);
            }
            cur[j] = self.lo[j];
        }
        // All coordinates wrapped: iteration over.
        Some(out)
    }
}
