//! Hilbert tables: multiplicity functions on a box [0,g], stored densely in
//! lexicographic order so that box offsets double as canonical point ids.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{box_iter, DegreeVector, Interval};

/// The restriction of a Hilbert function to the box [0,g].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    g: DegreeVector,
    strides: Vec<usize>,
    vals: Vec<u64>,
}

impl HilbertTable {
    /// Hard cap on the number of lattice points of [0,g].
    pub const MAX_POINTS: usize = 1 << 22;

    /// The all-zero table on [0,g].
    pub fn zero(g: &DegreeVector) -> Result<Self> {
        if !g.is_nonnegative() {
            return Err(Error::Domain(format!(
                "bounding degree {g} has a negative coordinate"
            )));
        }
        let n = g.len();
        let mut strides = vec![0usize; n];
        let mut points: usize = 1;
        for j in (0..n).rev() {
            strides[j] = points;
            points = points
                .checked_mul((g[j] + 1) as usize)
                .filter(|&p| p <= Self::MAX_POINTS)
                .ok_or_else(|| {
                    Error::Domain(format!(
                        "box [0,{g}] exceeds the size cap of {} points",
                        Self::MAX_POINTS
                    ))
                })?;
        }
        Ok(HilbertTable {
            g: g.clone(),
            strides,
            vals: vec![0; points],
        })
    }

    pub fn from_values(g: &DegreeVector, vals: Vec<u64>) -> Result<Self> {
        let mut t = Self::zero(g)?;
        if vals.len() != t.vals.len() {
            return Err(Error::Domain(format!(
                "expected {} values for the box [0,{g}], got {}",
                t.vals.len(),
                vals.len()
            )));
        }
        t.vals = vals;
        Ok(t)
    }

    pub fn from_fn(g: &DegreeVector, mut f: impl FnMut(&DegreeVector) -> u64) -> Result<Self> {
        let mut t = Self::zero(g)?;
        for (off, a) in box_iter(g).enumerate() {
            t.vals[off] = f(&a);
        }
        Ok(t)
    }

    pub fn g(&self) -> &DegreeVector {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.len()
    }

    pub fn num_points(&self) -> usize {
        self.vals.len()
    }

    /// Multiplicity at a point of the box.
    pub fn value(&self, a: &DegreeVector) -> Result<u64> {
        if a.len() != self.g.len() {
            return Err(Error::DimensionMismatch {
                expected: self.g.len(),
                got: a.len(),
            });
        }
        if !a.is_nonnegative() || !a.le(&self.g) {
            return Err(Error::Domain(format!(
                "{a} lies outside the box [0,{}]",
                self.g
            )));
        }
        Ok(self.vals[self.offset(a)])
    }

    pub(crate) fn offset(&self, a: &DegreeVector) -> usize {
        debug_assert!(a.is_nonnegative() && a.le(&self.g));
        a.as_slice()
            .iter()
            .zip(&self.strides)
            .map(|(c, s)| *c as usize * s)
            .sum()
    }

    /// Inverse of `offset`.
    pub(crate) fn degree_at(&self, mut off: usize) -> DegreeVector {
        debug_assert!(off < self.vals.len());
        let coords = self
            .strides
            .iter()
            .map(|s| {
                let c = (off / s) as i64;
                off %= s;
                c
            })
            .collect();
        DegreeVector::new(coords)
    }

    pub(crate) fn values(&self) -> &[u64] {
        &self.vals
    }

    pub fn total_mass(&self) -> u64 {
        self.vals.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.vals.iter().all(|&v| v == 0)
    }

    /// (point, multiplicity) pairs in lexicographic point order.
    pub fn iter(&self) -> impl Iterator<Item = (DegreeVector, u64)> + '_ {
        box_iter(&self.g).zip(self.vals.iter().copied())
    }

    /// Adds `count` times the indicator of [a,b]; the interval must sit
    /// inside the box.
    pub fn add_interval(&mut self, iv: &Interval, count: u64) -> Result<()> {
        if iv.n() != self.g.len() {
            return Err(Error::DimensionMismatch {
                expected: self.g.len(),
                got: iv.n(),
            });
        }
        if !iv.upper().le(&self.g) {
            return Err(Error::Domain(format!(
                "interval {iv} does not fit in the box [0,{}]",
                self.g
            )));
        }
        for p in iv.points() {
            let off = self.offset(&p);
            self.vals[off] = self.vals[off]
                .checked_add(count)
                .ok_or_else(|| Error::Domain("table multiplicity overflow".into()))?;
        }
        Ok(())
    }

    /// Renders the table as a polynomial with the given variable names.
    pub fn polynomial_string(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.g.len());
        let mut terms = Vec::new();
        for (a, v) in self.iter() {
            if v == 0 {
                continue;
            }
            let mono = monomial_string(&a, names);
            let term = if mono == "1" {
                format!("{v}")
            } else if v == 1 {
                mono
            } else {
                format!("{v}*{mono}")
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// X^a in the given variable names; "1" for the zero degree.
pub fn monomial_string(a: &DegreeVector, names: &[String]) -> String {
    assert_eq!(names.len(), a.len());
    let mut parts = Vec::new();
    for (j, &e) in a.as_slice().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[j].clone()),
            _ => parts.push(format!("{}^{e}", names[j])),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for HilbertTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.g.len()).map(|j| format!("X{j}")).collect();
        write!(f, "{}", self.polynomial_string(&names))
    }
}

/// The table of the interval module K[a,b]: multiplicity 1 on every point of
/// [a,b] and 0 elsewhere, on the box [0,b].
pub fn q_interval(iv: &Interval) -> Result<HilbertTable> {
    let mut t = HilbertTable::zero(iv.upper())?;
    t.add_interval(iv, 1)?;
    Ok(t)
}
