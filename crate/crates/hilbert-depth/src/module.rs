//! Module presentations: finite direct sums of shifted monomial subquotients
//! x^shift (I/J) over a polynomial ring K[X_1..X_n], their Hilbert tables on
//! a determining box, degreewise bases, and the two base-change transports
//! (adding polynomial variables, setting trailing variables to 1).

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{DegreeVector, Interval, VarSet};
use crate::partition::HilbertPartition;
use crate::table::HilbertTable;

/// A monomial ideal given by its unique minimal generating set, kept sorted
/// and pairwise incomparable. No generators means the zero ideal; the zero
/// exponent as a generator means the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<DegreeVector>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<DegreeVector>) -> Result<Self> {
        for g in &gens {
            if g.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: g.len(),
                });
            }
            if !g.is_nonnegative() {
                return Err(Error::Domain(format!(
                    "ideal generator {g} has a negative exponent"
                )));
            }
        }
        Ok(MonomialIdeal {
            gens: minimize(gens),
        })
    }

    pub fn zero(_n: usize) -> Self {
        MonomialIdeal { gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            gens: vec![DegreeVector::zero(n)],
        }
    }

    /// Minimal generators, sorted lexicographically.
    pub fn gens(&self) -> &[DegreeVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].as_slice().iter().all(|&c| c == 0)
    }

    /// Whether the monomial X^e lies in the ideal.
    pub fn contains(&self, e: &DegreeVector) -> bool {
        if !e.is_nonnegative() {
            return false;
        }
        self.gens.iter().any(|g| g.le(e))
    }

    /// Ideal containment: every generator of `self` divisible by one of
    /// `other`.
    pub fn is_subideal_of(&self, other: &Self) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Keeps the first `keep` exponents of every generator and re-minimizes.
    pub fn truncated(&self, keep: usize) -> Self {
        MonomialIdeal {
            gens: minimize(
                self.gens
                    .iter()
                    .map(|g| DegreeVector::new(g.as_slice()[..keep].to_vec()))
                    .collect(),
            ),
        }
    }

    fn padded(&self, m: usize) -> Self {
        MonomialIdeal {
            gens: self
                .gens
                .iter()
                .map(|g| {
                    let mut c = g.as_slice().to_vec();
                    c.extend(std::iter::repeat_n(0, m));
                    DegreeVector::new(c)
                })
                .collect(),
        }
    }
}

fn minimize(mut gens: Vec<DegreeVector>) -> Vec<DegreeVector> {
    gens.sort_by(|a, b| a.lex_cmp(b));
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            !gens
                .iter()
                .enumerate()
                .any(|(j, h)| j != i && h.le(g) && h != g)
        })
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

/// One direct summand x^shift (I/J) with J contained in I.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    shift: DegreeVector,
    numerator: MonomialIdeal,
    denominator: MonomialIdeal,
}

impl Summand {
    pub fn new(
        shift: DegreeVector,
        numerator: MonomialIdeal,
        denominator: MonomialIdeal,
    ) -> Result<Self> {
        let n = shift.len();
        if !shift.is_nonnegative() {
            return Err(Error::Domain(format!(
                "summand shift {shift} has a negative coordinate (standing assumption violated)"
            )));
        }
        for g in numerator.gens().iter().chain(denominator.gens()) {
            if g.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: g.len(),
                });
            }
        }
        if !denominator.is_subideal_of(&numerator) {
            return Err(Error::Domain(
                "denominator ideal is not contained in the numerator ideal".into(),
            ));
        }
        Ok(Summand {
            shift,
            numerator,
            denominator,
        })
    }

    pub fn shift(&self) -> &DegreeVector {
        &self.shift
    }

    pub fn numerator(&self) -> &MonomialIdeal {
        &self.numerator
    }

    pub fn denominator(&self) -> &MonomialIdeal {
        &self.denominator
    }

    /// Whether the summand is nonzero in degree a.
    pub fn nonzero_at(&self, a: &DegreeVector) -> bool {
        if !self.shift.le(a) {
            return false;
        }
        let e = a.minus(&self.shift);
        self.numerator.contains(&e) && !self.denominator.contains(&e)
    }

    /// shift joined with shift + (join of all generator exponents).
    fn local_g(&self) -> DegreeVector {
        let n = self.shift.len();
        let join_gens = self
            .numerator
            .gens()
            .iter()
            .chain(self.denominator.gens())
            .fold(DegreeVector::zero(n), |acc, g| acc.join(g));
        self.shift.join(&self.shift.plus(&join_gens))
    }
}

/// A basis element of the module in one degree: summand indices are 0-based
/// positions in the spec's summand list, and each summand contributes at
/// most one basis element per degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComponentBasisElement {
    pub summand_index: usize,
    pub degree: DegreeVector,
}

/// A full module presentation over K[X_1..X_n].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec {
    vars: Vec<String>,
    summands: Vec<Summand>,
    g_override: Option<DegreeVector>,
}

impl ModuleSpec {
    pub const MAX_SUMMANDS: usize = 1 << 16;

    pub fn new(
        vars: Vec<String>,
        summands: Vec<Summand>,
        g_override: Option<DegreeVector>,
    ) -> Result<Self> {
        let n = vars.len();
        if n == 0 || n > VarSet::MAX_VARS {
            return Err(Error::Domain(format!(
                "variable count must be in 1..={}, got {n}",
                VarSet::MAX_VARS
            )));
        }
        for (i, name) in vars.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::Domain(format!(
                    "variable {} has an empty name",
                    i + 1
                )));
            }
            if vars[..i].contains(name) {
                return Err(Error::Domain(format!("duplicate variable name \"{name}\"")));
            }
        }
        if summands.len() > Self::MAX_SUMMANDS {
            return Err(Error::Domain(format!(
                "summand count {} exceeds the limit {}",
                summands.len(),
                Self::MAX_SUMMANDS
            )));
        }
        for s in &summands {
            if s.shift().len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: s.shift().len(),
                });
            }
        }
        let spec = ModuleSpec {
            vars,
            summands,
            g_override: None,
        };
        if let Some(g) = g_override {
            if g.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: g.len(),
                });
            }
            let computed = spec.computed_g();
            if !computed.le(&g) {
                return Err(Error::Domain(format!(
                    "g override {g} does not dominate the computed determining degree {computed}"
                )));
            }
            return Ok(ModuleSpec {
                g_override: Some(g),
                ..spec
            });
        }
        Ok(spec)
    }

    /// Convenience constructor naming the variables X1..Xn.
    pub fn with_default_names(n: usize, summands: Vec<Summand>) -> Result<Self> {
        ModuleSpec::new(default_names(1, n), summands, None)
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn g_override(&self) -> Option<&DegreeVector> {
        self.g_override.as_ref()
    }

    fn computed_g(&self) -> DegreeVector {
        self.summands
            .iter()
            .fold(DegreeVector::zero(self.n()), |acc, s| {
                acc.join(&s.local_g())
            })
    }

    /// The determining degree: the componentwise smallest g this code
    /// certifies the module to be positively g-determined for, or the
    /// user's override when present (the override must dominate it).
    pub fn determine_g(&self) -> DegreeVector {
        match &self.g_override {
            Some(g) => g.clone(),
            None => self.computed_g(),
        }
    }

    /// Hilbert table on [0,g]; g must dominate the determining degree.
    pub fn hilbert_table(&self, g: &DegreeVector) -> Result<HilbertTable> {
        if g.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: g.len(),
            });
        }
        if !self.determine_g().le(g) {
            return Err(Error::Domain(format!(
                "table box [0,{g}] is smaller than the determining degree {}",
                self.determine_g()
            )));
        }
        HilbertTable::from_fn(g, |a| {
            self.summands.iter().filter(|s| s.nonzero_at(a)).count() as u64
        })
    }

    /// Basis of the degree-a component, in summand order.
    pub fn component_basis(&self, a: &DegreeVector) -> Vec<ComponentBasisElement> {
        assert_eq!(a.len(), self.n(), "degree of wrong dimension");
        self.summands
            .iter()
            .enumerate()
            .filter(|(_, s)| s.nonzero_at(a))
            .map(|(k, _)| ComponentBasisElement {
                summand_index: k,
                degree: a.clone(),
            })
            .collect()
    }

    /// Multiplication by the monomial X^t inside one summand: the image
    /// basis element, or None when X^t kills it. Never mixes summands.
    pub fn multiply(
        &self,
        e: &ComponentBasisElement,
        t: &DegreeVector,
    ) -> Option<ComponentBasisElement> {
        assert!(
            t.is_nonnegative(),
            "multiplier exponent must be nonnegative"
        );
        assert!(
            e.summand_index < self.summands.len(),
            "summand index out of range"
        );
        let target = e.degree.plus(t);
        self.summands[e.summand_index]
            .nonzero_at(&target)
            .then_some(ComponentBasisElement {
                summand_index: e.summand_index,
                degree: target,
            })
    }

    /// Whether every degree component has dimension at most 1 on [0,g].
    pub fn is_dim_le_1(&self, g: &DegreeVector) -> Result<bool> {
        Ok(self.hilbert_table(g)?.values().iter().all(|&v| v <= 1))
    }

    /// The same module over K[X_1..X_{n+m}]: degrees are padded with m
    /// zeros. Hilbert and Stanley depth both grow by exactly m.
    pub fn extend_scalars(&self, m: usize) -> Result<ModuleSpec> {
        if m == 0 {
            return Err(Error::Precondition(
                "scalar extension needs at least one new variable".into(),
            ));
        }
        let n = self.n();
        if n + m > VarSet::MAX_VARS {
            return Err(Error::Domain(format!(
                "variable count {} exceeds the limit {}",
                n + m,
                VarSet::MAX_VARS
            )));
        }
        let mut vars = self.vars.clone();
        for mut name in default_names(n + 1, n + m) {
            while vars.contains(&name) {
                name.push('_');
            }
            vars.push(name);
        }
        let pad = |v: &DegreeVector| {
            let mut c = v.as_slice().to_vec();
            c.extend(std::iter::repeat_n(0, m));
            DegreeVector::new(c)
        };
        let summands = self
            .summands
            .iter()
            .map(|s| Summand {
                shift: pad(s.shift()),
                numerator: s.numerator.padded(m),
                denominator: s.denominator.padded(m),
            })
            .collect();
        ModuleSpec::new(vars, summands, self.g_override.as_ref().map(pad))
    }

    /// Sets the variables beyond the first `keep` to 1. Only supported for
    /// direct sums of plain monomial ideals: zero shifts and zero
    /// denominators. Generator exponents are truncated and re-minimized.
    pub fn specialize_ideal_spec(&self, keep: usize) -> Result<ModuleSpec> {
        if keep == 0 || keep > self.n() {
            return Err(Error::Domain(format!(
                "keep count {keep} out of range 1..={}",
                self.n()
            )));
        }
        for s in &self.summands {
            let plain = s.shift().as_slice().iter().all(|&c| c == 0) && s.denominator().is_zero();
            if !plain {
                return Err(Error::Precondition(
                    "specialization supports only direct sums of plain monomial ideals \
                     (zero shifts, zero denominators)"
                        .into(),
                ));
            }
        }
        let summands = self
            .summands
            .iter()
            .map(|s| Summand {
                shift: DegreeVector::zero(keep),
                numerator: s.numerator.truncated(keep),
                denominator: MonomialIdeal::zero(keep),
            })
            .collect();
        ModuleSpec::new(
            self.vars[..keep].to_vec(),
            summands,
            self.g_override
                .as_ref()
                .map(|g| DegreeVector::new(g.as_slice()[..keep].to_vec())),
        )
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.summands.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "x^{}(I{}/J{})", s.shift(), k + 1, k + 1)?;
        }
        if self.summands.is_empty() {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn default_names(from: usize, to: usize) -> Vec<String> {
    (from..=to).map(|j| format!("X{j}")).collect()
}

/// Transports a partition along the specialization that keeps the first
/// `keep` variables: intervals are truncated and their multiplicities are
/// scaled by the point count of the dropped part, prod (b_i - a_i + 1).
pub fn specialize_partition(p: &HilbertPartition, keep: usize) -> Result<HilbertPartition> {
    let n = p.g().len();
    if keep == 0 || keep > n {
        return Err(Error::Domain(format!(
            "keep count {keep} out of range 1..={n}"
        )));
    }
    let truncate = |v: &DegreeVector| DegreeVector::new(v.as_slice()[..keep].to_vec());
    let mut intervals = Vec::new();
    for (iv, count) in p.intervals() {
        let mut scale: u64 = 1;
        for j in keep..n {
            scale = scale
                .checked_mul((iv.upper()[j] - iv.lower()[j] + 1) as u64)
                .ok_or_else(|| Error::Domain("interval multiplicity overflow".into()))?;
        }
        let count = count
            .checked_mul(scale)
            .ok_or_else(|| Error::Domain("interval multiplicity overflow".into()))?;
        intervals.push((
            Interval::new(truncate(iv.lower()), truncate(iv.upper()))?,
            count,
        ));
    }
    HilbertPartition::new(truncate(p.g()), intervals)
}
