//! Stanley decompositions and Stanley depth.
//!
//! A Stanley decomposition writes the module as a finite direct sum of
//! Stanley spaces m K[Z], with m a homogeneous element and Z a set of
//! variables none of whose polynomials annihilates m. For a positively
//! g-determined module everything is decidable on the box [0,g]:
//!
//! * a candidate family is a decomposition iff its parts rebuild a Hilbert
//!   partition of the table, every part is annihilator-free (checked on a
//!   finite sub-box), and the finitely many monomial products of the
//!   generators inside the box are linearly independent;
//! * searching the induced decompositions of all Hilbert partitions finds
//!   the Stanley depth, since every Stanley decomposition can be converted
//!   into an induced one of no smaller depth.
//!
//! Generators live in the degreewise bases of [`ModuleSpec`], so a part is
//! a rational coefficient vector over the basis of its shift degree.
//! Because multiplication by a monomial never mixes summands and scales
//! basis coefficients through unchanged, annihilator-freeness depends only
//! on which coefficients are nonzero, and the independence matrix is
//! blockwise linear in the coefficient vectors. Existence of a valid
//! choice is therefore decided exactly by evaluating the block-multilinear
//! rank polynomial on the finite grid {1..c_i+1}^{k_i} per part (c_i =
//! number of in-box products of part i, k_i = basis dimension at its
//! shift): per-variable degrees are bounded by c_i, so full-rank somewhere
//! implies full-rank on the grid, and exhausting the grid proves that no
//! choice of generators exists.

use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{box_iter, g_set, sub_box_iter, z_set_in_box, DegreeVector, Interval, VarSet};
use crate::linalg::rank;
use crate::module::{ComponentBasisElement, ModuleSpec};
use crate::partition::{
    for_each_partition, hdepth, induced_decomposition, partition_from_decomposition,
    HilbertDecomposition,
};
use crate::table::HilbertTable;

/// One Stanley space m K[vars]: the generator is a linear combination of
/// the degreewise basis elements of a single degree, with nonzero
/// coefficients only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StanleyPart {
    generator: Vec<(ComponentBasisElement, BigRational)>,
    vars: VarSet,
}

impl StanleyPart {
    pub fn new(generator: Vec<(ComponentBasisElement, BigRational)>, vars: VarSet) -> Result<Self> {
        let Some(first) = generator.first() else {
            return Err(Error::Precondition(
                "a Stanley space needs a nonzero generator".into(),
            ));
        };
        for (e, c) in &generator {
            if e.degree != first.0.degree {
                return Err(Error::Domain(
                    "generator terms live in different degrees".into(),
                ));
            }
            if c.is_zero() {
                return Err(Error::Domain("generator carries a zero coefficient".into()));
            }
        }
        Ok(StanleyPart { generator, vars })
    }

    pub fn generator(&self) -> &[(ComponentBasisElement, BigRational)] {
        &self.generator
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn degree(&self) -> &DegreeVector {
        &self.generator[0].0.degree
    }
}

/// A certified Stanley decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StanleyDecomposition {
    parts: Vec<StanleyPart>,
}

impl StanleyDecomposition {
    pub fn new(parts: Vec<StanleyPart>) -> Self {
        StanleyDecomposition { parts }
    }

    pub fn parts(&self) -> &[StanleyPart] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Minimum variable count over the parts; n for the decomposition of
    /// the zero module.
    pub fn depth(&self, n: usize) -> usize {
        self.parts.iter().map(|p| p.vars.len()).min().unwrap_or(n)
    }

    pub fn to_hilbert(&self) -> HilbertDecomposition {
        HilbertDecomposition::new(
            self.parts
                .iter()
                .map(|p| crate::partition::HilbertComponent {
                    vars: p.vars,
                    shift: p.degree().clone(),
                })
                .collect(),
        )
    }
}

/// A checkable certificate: a Hilbert decomposition together with one
/// coefficient vector per component, indexed by the degreewise basis of
/// the component's shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StanleyCandidate {
    decomposition: HilbertDecomposition,
    choices: Vec<Vec<BigRational>>,
}

impl StanleyCandidate {
    pub fn new(
        decomposition: HilbertDecomposition,
        choices: Vec<Vec<BigRational>>,
    ) -> Result<Self> {
        if decomposition.components().len() != choices.len() {
            return Err(Error::DimensionMismatch {
                expected: decomposition.components().len(),
                got: choices.len(),
            });
        }
        Ok(StanleyCandidate {
            decomposition,
            choices,
        })
    }

    pub fn decomposition(&self) -> &HilbertDecomposition {
        &self.decomposition
    }

    pub fn choices(&self) -> &[Vec<BigRational>] {
        &self.choices
    }
}

/// Verdict of the finite decomposition check, most specific failure first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    /// The component's shift touches the box boundary in a variable the
    /// component does not contain; such a family can never count correctly
    /// one step beyond the boundary.
    BoundaryViolation {
        component: usize,
        var: usize,
    },
    /// The rebuilt intervals do not sum to the module's Hilbert table.
    NotHilbertDecomposition,
    ZeroGenerator {
        component: usize,
    },
    AnnihilatorFails {
        component: usize,
    },
    DependentProducts,
}

impl CheckOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckOutcome::Pass => write!(f, "pass"),
            CheckOutcome::BoundaryViolation { component, var } => write!(
                f,
                "component {} reaches the box boundary in variable {} without containing it",
                component + 1,
                var
            ),
            CheckOutcome::NotHilbertDecomposition => write!(
                f,
                "the family is not a Hilbert decomposition of the module on its box"
            ),
            CheckOutcome::ZeroGenerator { component } => {
                write!(f, "component {} has the zero generator", component + 1)
            }
            CheckOutcome::AnnihilatorFails { component } => {
                write!(f, "component {} is not annihilator-free", component + 1)
            }
            CheckOutcome::DependentProducts => write!(
                f,
                "the monomial products of the generators are linearly dependent"
            ),
        }
    }
}

/// Whether the element with the given basis coefficients at degree `s` is
/// annihilator-free with respect to `vars`: no monomial in the variables
/// kills it. Decided on the sub-box [s,b] with b_j = g_j on `vars` and
/// b_j = s_j elsewhere; beyond b the multiplication maps are bijective.
/// Only the support of `coeffs` matters, because monomials move basis
/// elements within their own summand and never cancel across summands.
pub fn annihilator_free(
    spec: &ModuleSpec,
    s: &DegreeVector,
    coeffs: &[BigRational],
    vars: VarSet,
    g: &DegreeVector,
) -> Result<bool> {
    let n = spec.n();
    if s.len() != n || g.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: if s.len() != n { s.len() } else { g.len() },
        });
    }
    if !s.is_nonnegative() || !s.le(g) {
        return Err(Error::Precondition(format!(
            "degree {s} lies outside the box [0,{g}]"
        )));
    }
    if !vars.is_subset(&VarSet::full(n)) {
        return Err(Error::Precondition(format!(
            "variable set {vars} mentions variables beyond the ring's {n}"
        )));
    }
    let basis = spec.component_basis(s);
    if coeffs.len() != basis.len() {
        return Err(Error::DimensionMismatch {
            expected: basis.len(),
            got: coeffs.len(),
        });
    }
    if coeffs.iter().all(Zero::is_zero) {
        return Err(Error::Precondition(
            "the zero element generates no Stanley space".into(),
        ));
    }
    let b = DegreeVector::new(
        (0..n)
            .map(|j| if vars.contains(j + 1) { g[j] } else { s[j] })
            .collect(),
    );
    for c in sub_box_iter(s, &b) {
        let t = c.minus(s);
        let survives = basis
            .iter()
            .zip(coeffs)
            .any(|(e, a)| !a.is_zero() && spec.multiply(e, &t).is_some());
        if !survives {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The linear-independence matrix of all in-box monomial products, kept
/// symbolic: entry positions only, each tagged with the coefficient index
/// it picks out of its component's choice vector.
struct ProductMatrix {
    nrows: usize,
    /// blocks[i][c] lists (row, coefficient index) pairs of column c of
    /// component i.
    blocks: Vec<Vec<Vec<(usize, usize)>>>,
    ncols: usize,
}

impl ProductMatrix {
    fn build(
        spec: &ModuleSpec,
        g: &DegreeVector,
        table: &HilbertTable,
        dec: &HilbertDecomposition,
    ) -> Self {
        let n = spec.n();
        let mut row_of: HashMap<(usize, usize), usize> = HashMap::new();
        for a in box_iter(g) {
            for e in spec.component_basis(&a) {
                let id = row_of.len();
                row_of.insert((table.offset(&a), e.summand_index), id);
            }
        }
        let nrows = row_of.len();
        let mut blocks = Vec::with_capacity(dec.components().len());
        let mut ncols = 0;
        for comp in dec.components() {
            let s = &comp.shift;
            let basis = spec.component_basis(s);
            let hi = DegreeVector::new(
                (0..n)
                    .map(|j| {
                        if comp.vars.contains(j + 1) {
                            g[j]
                        } else {
                            s[j]
                        }
                    })
                    .collect(),
            );
            let mut cols = Vec::new();
            for c in sub_box_iter(s, &hi) {
                let t = c.minus(s);
                let mut col = Vec::new();
                for (k, e) in basis.iter().enumerate() {
                    if let Some(img) = spec.multiply(e, &t) {
                        let row = row_of[&(table.offset(&c), img.summand_index)];
                        col.push((row, k));
                    }
                }
                cols.push(col);
            }
            ncols += cols.len();
            blocks.push(cols);
        }
        ProductMatrix {
            nrows,
            blocks,
            ncols,
        }
    }

    /// Instantiates the matrix at concrete choice vectors and reports
    /// whether the columns are linearly independent.
    fn independent_at(&self, choices: &[Vec<BigRational>]) -> bool {
        let mut rows = vec![vec![BigRational::zero(); self.ncols]; self.nrows];
        let mut col_id = 0;
        for (block, choice) in self.blocks.iter().zip(choices) {
            for col in block {
                for &(row, k) in col {
                    rows[row][col_id] = choice[k].clone();
                }
                col_id += 1;
            }
        }
        rank(rows) == self.ncols
    }
}

/// Full finite check of a candidate against the module on the box [0,g],
/// reporting the first failing condition.
pub fn check_stanley_candidate_outcome(
    spec: &ModuleSpec,
    g: &DegreeVector,
    cand: &StanleyCandidate,
) -> Result<CheckOutcome> {
    let n = spec.n();
    let table = spec.hilbert_table(g)?;
    let comps = cand.decomposition.components();
    for (i, comp) in comps.iter().enumerate() {
        if comp.shift.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: comp.shift.len(),
            });
        }
        if !comp.shift.is_nonnegative() {
            return Err(Error::Domain(format!(
                "component {} has shift {} with a negative coordinate",
                i + 1,
                comp.shift
            )));
        }
        if !comp.shift.le(g) {
            return Err(Error::Precondition(format!(
                "component {} has shift {} outside the box [0,{g}]; check with a larger g",
                i + 1,
                comp.shift
            )));
        }
        if !comp.vars.is_subset(&VarSet::full(n)) {
            return Err(Error::Precondition(format!(
                "component {} mentions variables beyond the ring's {n}",
                i + 1
            )));
        }
        let k = spec.component_basis(&comp.shift).len();
        if cand.choices[i].len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                got: cand.choices[i].len(),
            });
        }
    }
    for (i, comp) in comps.iter().enumerate() {
        for j in 1..=n {
            if comp.shift[j - 1] == g[j - 1] && !comp.vars.contains(j) {
                return Ok(CheckOutcome::BoundaryViolation {
                    component: i,
                    var: j,
                });
            }
        }
    }
    match partition_from_decomposition(&cand.decomposition, &table) {
        Ok(_) => {}
        Err(Error::Inconsistent) => return Ok(CheckOutcome::NotHilbertDecomposition),
        Err(e) => return Err(e),
    }
    for (i, choice) in cand.choices.iter().enumerate() {
        if choice.iter().all(Zero::is_zero) {
            return Ok(CheckOutcome::ZeroGenerator { component: i });
        }
    }
    for (i, comp) in comps.iter().enumerate() {
        if !annihilator_free(spec, &comp.shift, &cand.choices[i], comp.vars, g)? {
            return Ok(CheckOutcome::AnnihilatorFails { component: i });
        }
    }
    let matrix = ProductMatrix::build(spec, g, &table, &cand.decomposition);
    if !matrix.independent_at(&cand.choices) {
        return Ok(CheckOutcome::DependentProducts);
    }
    Ok(CheckOutcome::Pass)
}

/// Boolean form of [`check_stanley_candidate_outcome`].
pub fn check_stanley_candidate(
    spec: &ModuleSpec,
    g: &DegreeVector,
    cand: &StanleyCandidate,
) -> Result<bool> {
    Ok(check_stanley_candidate_outcome(spec, g, cand)?.is_pass())
}

/// Cheap necessary condition on a Hilbert decomposition: every component
/// must have a nonzero degree component and survive its annihilator box at
/// full support. Pruning on a false result is sound, because a monomial
/// that kills every basis element of a degree kills every combination.
pub fn necessary_stanley_filter(
    spec: &ModuleSpec,
    g: &DegreeVector,
    dec: &HilbertDecomposition,
) -> Result<bool> {
    for comp in dec.components() {
        let k = spec.component_basis(&comp.shift).len();
        if k == 0 {
            return Ok(false);
        }
        let ones = vec![BigRational::one(); k];
        if !annihilator_free(spec, &comp.shift, &ones, comp.vars, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides whether some choice of generators turns the induced Hilbert
/// decomposition into a Stanley decomposition, returning a certified
/// candidate if so. Complete: the coefficient grid is large enough that
/// exhausting it proves no choice exists.
pub fn generic_stanley_check(
    spec: &ModuleSpec,
    g: &DegreeVector,
    dec: &HilbertDecomposition,
) -> Result<Option<StanleyCandidate>> {
    if !necessary_stanley_filter(spec, g, dec)? {
        return Ok(None);
    }
    let table = spec.hilbert_table(g)?;
    let matrix = ProductMatrix::build(spec, g, &table, dec);
    // One grid coordinate per basis coefficient; one-dimensional blocks
    // stay pinned at 1 since the rank polynomial is homogeneous per block.
    let mut radix: Vec<i64> = Vec::new();
    let mut spans: Vec<(usize, usize)> = Vec::new();
    for (i, comp) in dec.components().iter().enumerate() {
        let k = spec.component_basis(&comp.shift).len();
        let cap = if k == 1 {
            1
        } else {
            matrix.blocks[i].len() as i64 + 1
        };
        spans.push((radix.len(), k));
        radix.extend(std::iter::repeat_n(cap, k));
    }
    let mut current = vec![1i64; radix.len()];
    loop {
        let choices: Vec<Vec<BigRational>> = spans
            .iter()
            .map(|&(start, k)| {
                current[start..start + k]
                    .iter()
                    .map(|&v| BigRational::from_integer(BigInt::from(v)))
                    .collect()
            })
            .collect();
        if matrix.independent_at(&choices) {
            let cand = StanleyCandidate::new(dec.clone(), choices)?;
            debug_assert!(check_stanley_candidate(spec, g, &cand)?);
            return Ok(Some(cand));
        }
        let mut j = radix.len();
        loop {
            if j == 0 {
                return Ok(None);
            }
            j -= 1;
            if current[j] < radix[j] {
                current[j] += 1;
                for v in &mut current[j + 1..] {
                    *v = 1;
                }
                break;
            }
        }
    }
}

/// Turns a certified candidate into its Stanley decomposition.
pub fn candidate_to_stanley(
    spec: &ModuleSpec,
    cand: &StanleyCandidate,
) -> Result<StanleyDecomposition> {
    let mut parts = Vec::new();
    for (comp, choice) in cand.decomposition.components().iter().zip(&cand.choices) {
        let generator = spec
            .component_basis(&comp.shift)
            .into_iter()
            .zip(choice)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, c.clone()))
            .collect();
        parts.push(StanleyPart::new(generator, comp.vars)?);
    }
    Ok(StanleyDecomposition::new(parts))
}

/// The finest Stanley decomposition: one part per basis element, each with
/// the full variable set of its degree's boundary contacts. Always valid:
/// the annihilator boxes degenerate to points and the products are exactly
/// the degreewise bases.
pub fn fine_decomposition(spec: &ModuleSpec, g: &DegreeVector) -> Result<StanleyDecomposition> {
    let table = spec.hilbert_table(g)?;
    let mut parts = Vec::new();
    for (a, v) in table.iter() {
        if v == 0 {
            continue;
        }
        let vars = z_set_in_box(&a, g);
        for e in spec.component_basis(&a) {
            parts.push(StanleyPart::new(vec![(e, BigRational::one())], vars)?);
        }
    }
    Ok(StanleyDecomposition::new(parts))
}

/// Stanley depth of the module on the box [0,g], with a certified witness
/// decomposition. The zero module yields (n, empty decomposition).
pub fn stdepth(spec: &ModuleSpec, g: &DegreeVector) -> Result<(usize, StanleyDecomposition)> {
    let table = spec.hilbert_table(g)?;
    if table.is_zero() {
        return Ok((spec.n(), StanleyDecomposition::new(Vec::new())));
    }
    if spec.is_dim_le_1(g)? {
        return stdepth_dim1(spec, g);
    }
    let (hd, _) = hdepth(&table);
    for d in (1..=hd).rev() {
        let mut hit: Option<StanleyCandidate> = None;
        let mut failure: Option<Error> = None;
        for_each_partition(&table, d, None, &mut |p| {
            if p.depth() != d {
                return ControlFlow::Continue(());
            }
            match generic_stanley_check(spec, g, &induced_decomposition(&p)) {
                Ok(Some(cand)) => {
                    hit = Some(cand);
                    ControlFlow::Break(())
                }
                Ok(None) => ControlFlow::Continue(()),
                Err(e) => {
                    failure = Some(e);
                    ControlFlow::Break(())
                }
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
        if let Some(cand) = hit {
            return Ok((d, candidate_to_stanley(spec, &cand)?));
        }
    }
    Ok((0, fine_decomposition(spec, g)?))
}

/// Stanley depth when every degree component has dimension at most one.
/// Each degree has a canonical generator, so a partition induces a Stanley
/// decomposition exactly when all its induced components are
/// annihilator-free; that test is pushed into the interval search as a
/// branch filter.
pub fn stdepth_dim1(spec: &ModuleSpec, g: &DegreeVector) -> Result<(usize, StanleyDecomposition)> {
    if !spec.is_dim_le_1(g)? {
        return Err(Error::Precondition(
            "a degree component has dimension greater than one".into(),
        ));
    }
    let table = spec.hilbert_table(g)?;
    if table.is_zero() {
        return Ok((spec.n(), StanleyDecomposition::new(Vec::new())));
    }
    let (hd, _) = hdepth(&table);
    for d in (1..=hd).rev() {
        let admissible = |iv: &Interval| -> bool {
            let vars = z_set_in_box(iv.upper(), g);
            g_set(iv, g)
                .expect("interval inside the box")
                .into_iter()
                .all(|c| {
                    let k = spec.component_basis(&c).len();
                    k == 1
                        && annihilator_free(spec, &c, &[BigRational::one()], vars, g)
                            .expect("corner inside the box")
                })
        };
        let mut witness = None;
        for_each_partition(&table, d, Some(&admissible), &mut |p| {
            witness = Some(p);
            ControlFlow::Break(())
        })?;
        if let Some(p) = witness {
            let dec = induced_decomposition(&p);
            let mut parts = Vec::new();
            for comp in dec.components() {
                let e = spec
                    .component_basis(&comp.shift)
                    .into_iter()
                    .next()
                    .expect("filtered corners have a basis element");
                parts.push(StanleyPart::new(vec![(e, BigRational::one())], comp.vars)?);
            }
            let sd = StanleyDecomposition::new(parts);
            debug_assert!({
                let choices = sd
                    .parts()
                    .iter()
                    .map(|_| vec![BigRational::one()])
                    .collect();
                check_stanley_candidate(spec, g, &StanleyCandidate::new(dec, choices)?)?
            });
            return Ok((d, sd));
        }
    }
    Ok((0, fine_decomposition(spec, g)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{MonomialIdeal, Summand};
    use crate::partition::{enumerate_partitions, HilbertComponent};

    fn dv(c: &[i64]) -> DegreeVector {
        DegreeVector::new(c.to_vec())
    }

    fn vs(indices: &[usize], n: usize) -> VarSet {
        VarSet::from_indices(indices.iter().copied(), n).unwrap()
    }

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn ideal(n: usize, gens: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| dv(g)).collect()).unwrap()
    }

    /// R + (X1,X2)R, the module with 13 depth-1 partitions.
    fn free_plus_ideal() -> ModuleSpec {
        ModuleSpec::with_default_names(
            2,
            vec![
                Summand::new(dv(&[0, 0]), MonomialIdeal::unit(2), MonomialIdeal::zero(2)).unwrap(),
                Summand::new(
                    dv(&[0, 0]),
                    ideal(2, &[&[1, 0], &[0, 1]]),
                    MonomialIdeal::zero(2),
                )
                .unwrap(),
            ],
        )
        .unwrap()
    }

    /// R/(X1,X2) + x^(0,1)(R/(X1)) + x^(0,1)R, Hilbert depth 1 but Stanley
    /// depth 0.
    fn socle_spec() -> ModuleSpec {
        ModuleSpec::with_default_names(
            2,
            vec![
                Summand::new(
                    dv(&[0, 0]),
                    MonomialIdeal::unit(2),
                    ideal(2, &[&[1, 0], &[0, 1]]),
                )
                .unwrap(),
                Summand::new(dv(&[0, 1]), MonomialIdeal::unit(2), ideal(2, &[&[1, 0]])).unwrap(),
                Summand::new(dv(&[0, 1]), MonomialIdeal::unit(2), MonomialIdeal::zero(2)).unwrap(),
            ],
        )
        .unwrap()
    }

    fn component(vars: &[usize], shift: &[i64], n: usize) -> HilbertComponent {
        HilbertComponent {
            vars: vs(vars, n),
            shift: dv(shift),
        }
    }

    /// The depth-1 decomposition of R + (X1,X2)R certified by hand:
    /// (1,0)K[X1,X2] + (0,X2)K[X2] + (0,X1)K[X1,X2].
    fn certified_candidate() -> StanleyCandidate {
        StanleyCandidate::new(
            HilbertDecomposition::new(vec![
                component(&[1, 2], &[0, 0], 2),
                component(&[2], &[0, 1], 2),
                component(&[1, 2], &[1, 0], 2),
            ]),
            vec![vec![q(1)], vec![q(0), q(1)], vec![q(0), q(1)]],
        )
        .unwrap()
    }

    #[test]
    fn annihilator_basics() {
        let spec = socle_spec();
        let g = dv(&[1, 1]);
        // The socle element dies under X2.
        assert!(!annihilator_free(&spec, &dv(&[0, 0]), &[q(1)], vs(&[2], 2), &g).unwrap());
        assert!(!annihilator_free(&spec, &dv(&[0, 0]), &[q(1)], vs(&[1], 2), &g).unwrap());
        // With no variables there is nothing to kill it.
        assert!(annihilator_free(&spec, &dv(&[0, 0]), &[q(1)], VarSet::empty(), &g).unwrap());
        // At (0,1) the X2 direction sits on the boundary: nothing to check.
        assert!(annihilator_free(&spec, &dv(&[0, 1]), &[q(1), q(0)], vs(&[2], 2), &g).unwrap());
        // X1 kills the second summand but not the third; the support decides.
        assert!(!annihilator_free(&spec, &dv(&[0, 1]), &[q(1), q(0)], vs(&[1], 2), &g).unwrap());
        assert!(annihilator_free(&spec, &dv(&[0, 1]), &[q(0), q(1)], vs(&[1], 2), &g).unwrap());
        assert!(annihilator_free(&spec, &dv(&[0, 1]), &[q(1), q(1)], vs(&[1, 2], 2), &g).unwrap());
        // Misuse is reported, not computed around.
        assert!(annihilator_free(&spec, &dv(&[0, 0]), &[q(0)], VarSet::empty(), &g).is_err());
        assert!(annihilator_free(&spec, &dv(&[2, 0]), &[q(1)], VarSet::empty(), &g).is_err());
    }

    #[test]
    fn certified_decomposition_passes() {
        let spec = free_plus_ideal();
        let g = dv(&[1, 1]);
        let cand = certified_candidate();
        assert_eq!(
            check_stanley_candidate_outcome(&spec, &g, &cand).unwrap(),
            CheckOutcome::Pass
        );
        // Scaling a generator preserves the certificate.
        let scaled = StanleyCandidate::new(
            cand.decomposition().clone(),
            vec![
                vec![BigRational::new(BigInt::from(-1), BigInt::from(3))],
                vec![q(0), q(5)],
                vec![q(0), q(-2)],
            ],
        )
        .unwrap();
        assert!(check_stanley_candidate(&spec, &g, &scaled).unwrap());
    }

    #[test]
    fn four_part_certificate_passes() {
        // (1,0)K[X1,X2] + (0,X1X2)K[X1,X2] + (0,X1)K[X1] + (0,X2)K[X2].
        let spec = free_plus_ideal();
        let g = dv(&[1, 1]);
        let cand = StanleyCandidate::new(
            HilbertDecomposition::new(vec![
                component(&[1, 2], &[0, 0], 2),
                component(&[2], &[0, 1], 2),
                component(&[1], &[1, 0], 2),
                component(&[1, 2], &[1, 1], 2),
            ]),
            vec![
                vec![q(1)],
                vec![q(0), q(1)],
                vec![q(0), q(1)],
                vec![q(0), q(1)],
            ],
        )
        .unwrap();
        assert_eq!(
            check_stanley_candidate_outcome(&spec, &g, &cand).unwrap(),
            CheckOutcome::Pass
        );
    }

    #[test]
    fn dependent_products_detected() {
        // Choosing the free summand's monomial at (1,0) collides with the
        // products of the part based at the origin.
        let spec = free_plus_ideal();
        let g = dv(&[1, 1]);
        let cand = StanleyCandidate::new(
            certified_candidate().decomposition().clone(),
            vec![vec![q(1)], vec![q(0), q(1)], vec![q(1), q(0)]],
        )
        .unwrap();
        assert_eq!(
            check_stanley_candidate_outcome(&spec, &g, &cand).unwrap(),
            CheckOutcome::DependentProducts
        );
    }

    #[test]
    fn annihilator_failure_detected() {
        // The two depth-1 Hilbert decompositions of the socle module both
        // strand the socle: no generator choice at (0,0) survives X2.
        let spec = socle_spec();
        let g = dv(&[1, 1]);
        for components in [
            vec![component(&[2], &[0, 0], 2), component(&[1, 2], &[0, 1], 2)],
            vec![
                component(&[2], &[0, 0], 2),
                component(&[2], &[0, 1], 2),
                component(&[1, 2], &[1, 1], 2),
            ],
        ] {
            let choices = components
                .iter()
                .map(|c| {
                    let k = spec.component_basis(&c.shift).len();
                    (0..k).map(|i| q((i == 0) as i64)).collect()
                })
                .collect();
            let cand =
                StanleyCandidate::new(HilbertDecomposition::new(components), choices).unwrap();
            assert_eq!(
                check_stanley_candidate_outcome(&spec, &g, &cand).unwrap(),
                CheckOutcome::AnnihilatorFails { component: 0 }
            );
        }
    }

    #[test]
    fn boundary_and_counting_failures_detected() {
        let spec = socle_spec();
        let g = dv(&[1, 1]);
        // (1,1) touches the boundary in both variables; omitting variable 2
        // is structurally fatal no matter the counting.
        let cand = StanleyCandidate::new(
            HilbertDecomposition::new(vec![
                component(&[2], &[0, 0], 2),
                component(&[2], &[0, 1], 2),
                component(&[1], &[1, 1], 2),
            ]),
            vec![vec![q(1)], vec![q(1), q(0)], vec![q(1)]],
        )
        .unwrap();
        assert_eq!(
            check_stanley_candidate_outcome(&spec, &g, &cand).unwrap(),
            CheckOutcome::BoundaryViolation {
                component: 2,
                var: 2
            }
        );
        // A single full part overcounts the table.
        let cand = StanleyCandidate::new(
            HilbertDecomposition::new(vec![component(&[1, 2], &[0, 0], 2)]),
            vec![vec![q(1)]],
        )
        .unwrap();
        assert_eq!(
            check_stanley_candidate_outcome(&spec, &g, &cand).unwrap(),
            CheckOutcome::NotHilbertDecomposition
        );
        // Zero generators are rejected after counting passes.
        let p1 = StanleyCandidate::new(
            HilbertDecomposition::new(vec![
                component(&[2], &[0, 0], 2),
                component(&[1, 2], &[0, 1], 2),
            ]),
            vec![vec![q(0)], vec![q(1), q(1)]],
        )
        .unwrap();
        assert_eq!(
            check_stanley_candidate_outcome(&spec, &g, &p1).unwrap(),
            CheckOutcome::ZeroGenerator { component: 0 }
        );
        // Preconditions: shifts outside the box cannot be certified here.
        let outside = StanleyCandidate::new(
            HilbertDecomposition::new(vec![component(&[1, 2], &[2, 0], 2)]),
            vec![vec![]],
        )
        .unwrap();
        assert!(check_stanley_candidate_outcome(&spec, &g, &outside).is_err());
    }

    #[test]
    fn necessary_filter_agrees_with_search() {
        let g = dv(&[1, 1]);
        let spec = free_plus_ideal();
        let dec = certified_candidate().decomposition().clone();
        assert!(necessary_stanley_filter(&spec, &g, &dec).unwrap());
        let socle = socle_spec();
        let bad = HilbertDecomposition::new(vec![
            component(&[2], &[0, 0], 2),
            component(&[1, 2], &[0, 1], 2),
        ]);
        assert!(!necessary_stanley_filter(&socle, &g, &bad).unwrap());
        assert!(generic_stanley_check(&socle, &g, &bad).unwrap().is_none());
    }

    #[test]
    fn generic_search_finds_certificates() {
        let spec = free_plus_ideal();
        let g = dv(&[1, 1]);
        let table = spec.hilbert_table(&g).unwrap();
        let mut passing = 0;
        for p in enumerate_partitions(&table, 1, None).unwrap() {
            let dec = induced_decomposition(&p);
            if let Some(cand) = generic_stanley_check(&spec, &g, &dec).unwrap() {
                passing += 1;
                assert_eq!(
                    check_stanley_candidate_outcome(&spec, &g, &cand).unwrap(),
                    CheckOutcome::Pass
                );
            }
        }
        assert!(passing > 0, "some depth-1 partition must induce a witness");
    }

    #[test]
    fn stdepth_values() {
        let g = dv(&[1, 1]);
        let (d, sd) = stdepth(&free_plus_ideal(), &g).unwrap();
        assert_eq!(d, 1);
        assert_eq!(sd.depth(2), 1);
        let (d, sd) = stdepth(&socle_spec(), &g).unwrap();
        assert_eq!(d, 0);
        assert_eq!(sd.depth(2), 0);
        // The fall-through witness is itself a valid certificate.
        let choices = sd
            .parts()
            .iter()
            .map(|p| {
                let basis = socle_spec().component_basis(p.degree());
                basis
                    .iter()
                    .map(|e| {
                        p.generator()
                            .iter()
                            .find(|(b, _)| b == e)
                            .map_or_else(BigRational::zero, |(_, c)| c.clone())
                    })
                    .collect()
            })
            .collect();
        let cand = StanleyCandidate::new(sd.to_hilbert(), choices).unwrap();
        assert!(check_stanley_candidate(&socle_spec(), &g, &cand).unwrap());
    }

    #[test]
    fn stdepth_witness_matches_reported_depth() {
        let g = dv(&[1, 1]);
        let spec = free_plus_ideal();
        let (d, sd) = stdepth(&spec, &g).unwrap();
        assert_eq!(sd.depth(spec.n()), d);
        assert_eq!(
            sd.to_hilbert().table(&g).unwrap().values(),
            spec.hilbert_table(&g).unwrap().values()
        );
    }

    #[test]
    fn dim1_path() {
        // (X1X2, X1X3) over three variables: depth 2 on both measures.
        let spec = ModuleSpec::with_default_names(
            3,
            vec![Summand::new(
                dv(&[0, 0, 0]),
                ideal(3, &[&[1, 1, 0], &[1, 0, 1]]),
                MonomialIdeal::zero(3),
            )
            .unwrap()],
        )
        .unwrap();
        let g = spec.determine_g();
        assert_eq!(g, dv(&[1, 1, 1]));
        let (d, sd) = stdepth_dim1(&spec, &g).unwrap();
        assert_eq!(d, 2);
        assert_eq!(sd.depth(3), 2);
        let (dh, _) = hdepth(&spec.hilbert_table(&g).unwrap());
        assert_eq!(dh, 2);
        // The general entry point routes through the same computation.
        let (d2, _) = stdepth(&spec, &g).unwrap();
        assert_eq!(d2, 2);
        // Dimension-2 modules are rejected by the dedicated entry point.
        assert!(stdepth_dim1(&free_plus_ideal(), &dv(&[1, 1])).is_err());
    }

    #[test]
    fn maximal_ideal_depths() {
        let spec = ModuleSpec::with_default_names(
            2,
            vec![Summand::new(
                dv(&[0, 0]),
                ideal(2, &[&[1, 0], &[0, 1]]),
                MonomialIdeal::zero(2),
            )
            .unwrap()],
        )
        .unwrap();
        let g = spec.determine_g();
        let (d, sd) = stdepth(&spec, &g).unwrap();
        assert_eq!(d, 1);
        assert_eq!(sd.depth(2), 1);
        assert_eq!(hdepth(&spec.hilbert_table(&g).unwrap()).0, 1);
    }

    #[test]
    fn fine_decomposition_is_certified() {
        let spec = free_plus_ideal();
        let g = dv(&[1, 1]);
        let sd = fine_decomposition(&spec, &g).unwrap();
        assert_eq!(
            sd.parts().len() as u64,
            spec.hilbert_table(&g).unwrap().total_mass()
        );
        assert_eq!(sd.depth(2), 0);
        let choices = sd
            .parts()
            .iter()
            .map(|p| {
                let basis = spec.component_basis(p.degree());
                basis
                    .iter()
                    .map(|e| {
                        p.generator()
                            .iter()
                            .find(|(b, _)| b == e)
                            .map_or_else(BigRational::zero, |(_, c)| c.clone())
                    })
                    .collect()
            })
            .collect();
        let cand = StanleyCandidate::new(sd.to_hilbert(), choices).unwrap();
        assert_eq!(
            check_stanley_candidate_outcome(&spec, &g, &cand).unwrap(),
            CheckOutcome::Pass
        );
    }

    #[test]
    fn zero_module() {
        let spec = ModuleSpec::with_default_names(2, vec![]).unwrap();
        let g = dv(&[0, 0]);
        let (d, sd) = stdepth(&spec, &g).unwrap();
        assert_eq!(d, 2);
        assert!(sd.is_empty());
        let cand = StanleyCandidate::new(HilbertDecomposition::new(vec![]), vec![]).unwrap();
        assert!(check_stanley_candidate(&spec, &g, &cand).unwrap());
    }

    #[test]
    fn part_validation() {
        let e = ComponentBasisElement {
            summand_index: 0,
            degree: dv(&[0, 0]),
        };
        let f = ComponentBasisElement {
            summand_index: 1,
            degree: dv(&[0, 1]),
        };
        assert!(StanleyPart::new(vec![], VarSet::empty()).is_err());
        assert!(StanleyPart::new(vec![(e.clone(), q(0))], VarSet::empty()).is_err());
        assert!(StanleyPart::new(vec![(e.clone(), q(1)), (f, q(1))], VarSet::empty()).is_err());
        let part = StanleyPart::new(vec![(e, q(2))], vs(&[1], 2)).unwrap();
        assert_eq!(part.degree(), &dv(&[0, 0]));
        assert_eq!(part.vars().len(), 1);
    }
}
