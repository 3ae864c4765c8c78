//! Partitions of a Hilbert table into interval tables, the backtracking
//! search over them, and the translation between partitions and the Hilbert
//! decompositions they induce.
//!
//! Search invariants the correctness proofs lean on:
//!
//! * In any exact cover of the remaining table, the lexicographically first
//!   point with positive multiplicity must be the lower corner of some
//!   interval (every interval containing it has a lower corner <= it, and
//!   lex order extends the componentwise order), so branching only on that
//!   lower corner loses nothing.
//! * Each multiset of intervals is emitted exactly once: consecutive choices
//!   sharing a lower corner are forced to use non-decreasing upper corners
//!   in the canonical interval order.
//! * Emission order is canonical: chosen lower corners never decrease, so
//!   the choice stack is always sorted, and whole partitions appear in
//!   ascending lexicographic order of their sorted interval sequences.

use std::cmp::Ordering;
use std::fmt;
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{
    g_set, rho_in_box, sub_box_iter, z_set_in_box, DegreeVector, Interval, VarSet,
};
use crate::table::HilbertTable;

/// A multiset of intervals whose tables sum to a Hilbert table on [0,g],
/// kept in canonical form: sorted by (lower, upper) lexicographically, equal
/// intervals merged into a count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPartition {
    g: DegreeVector,
    intervals: Vec<(Interval, u64)>,
}

impl HilbertPartition {
    pub fn new(g: DegreeVector, intervals: Vec<(Interval, u64)>) -> Result<Self> {
        let mut entries = Vec::new();
        for (iv, count) in intervals {
            if iv.n() != g.len() {
                return Err(Error::DimensionMismatch {
                    expected: g.len(),
                    got: iv.n(),
                });
            }
            if !iv.upper().le(&g) {
                return Err(Error::Domain(format!(
                    "interval {iv} does not fit in the box [0,{g}]"
                )));
            }
            if count == 0 {
                return Err(Error::Domain(format!("interval {iv} has multiplicity 0")));
            }
            entries.push((iv, count));
        }
        entries.sort_by(|(a, _), (b, _)| a.cmp_canonical(b));
        let mut merged: Vec<(Interval, u64)> = Vec::new();
        for (iv, count) in entries {
            match merged.last_mut() {
                Some((last, c)) if *last == iv => {
                    *c = c
                        .checked_add(count)
                        .ok_or_else(|| Error::Domain("interval multiplicity overflow".into()))?;
                }
                _ => merged.push((iv, count)),
            }
        }
        Ok(HilbertPartition {
            g,
            intervals: merged,
        })
    }

    pub fn empty(g: DegreeVector) -> Self {
        HilbertPartition {
            g,
            intervals: Vec::new(),
        }
    }

    pub(crate) fn from_sorted(g: DegreeVector, intervals: Vec<(Interval, u64)>) -> Self {
        debug_assert!(intervals
            .windows(2)
            .all(|w| w[0].0.cmp_canonical(&w[1].0) == Ordering::Less));
        HilbertPartition { g, intervals }
    }

    pub fn g(&self) -> &DegreeVector {
        &self.g
    }

    /// Canonically sorted (interval, multiplicity) pairs.
    pub fn intervals(&self) -> &[(Interval, u64)] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Total number of intervals, multiplicities included.
    pub fn num_intervals(&self) -> u64 {
        self.intervals.iter().map(|(_, c)| c).sum()
    }

    /// min rho(upper corner) over the intervals; the empty partition has
    /// depth n by convention.
    pub fn depth(&self) -> usize {
        self.intervals
            .iter()
            .map(|(iv, _)| rho_in_box(iv.upper(), &self.g))
            .min()
            .unwrap_or_else(|| self.g.len())
    }

    /// The sum of the interval tables on [0,g].
    pub fn table(&self) -> Result<HilbertTable> {
        let mut t = HilbertTable::zero(&self.g)?;
        for (iv, count) in &self.intervals {
            t.add_interval(iv, *count)?;
        }
        Ok(t)
    }

    /// Checks that this partition reproduces `table` exactly.
    pub fn validate_against(&self, table: &HilbertTable) -> Result<()> {
        if self.g != *table.g() {
            return Err(Error::Domain(format!(
                "partition bounding degree {} does not match the table's {}",
                self.g,
                table.g()
            )));
        }
        if self.table()? != *table {
            return Err(Error::Inconsistent);
        }
        Ok(())
    }

    /// Canonical total order: lexicographic on the expanded (multiplicities
    /// unrolled) sorted interval sequences.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        let mut a = self.intervals.iter();
        let mut b = other.intervals.iter();
        let (mut ai, mut bi) = (a.next(), b.next());
        let (mut ac, mut bc) = (0u64, 0u64);
        loop {
            match (ai, bi) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((x, xc)), Some((y, yc))) => match x.cmp_canonical(y) {
                    Ordering::Equal => {
                        let step = (xc - ac).min(yc - bc);
                        ac += step;
                        bc += step;
                        if ac == *xc {
                            ai = a.next();
                            ac = 0;
                        }
                        if bc == *yc {
                            bi = b.next();
                            bc = 0;
                        }
                    }
                    ord => return ord,
                },
            }
        }
    }
}

impl fmt::Display for HilbertPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "0");
        }
        for (k, (iv, count)) in self.intervals.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *count > 1 {
                write!(f, "{count}*")?;
            }
            write!(f, "Q{iv}")?;
        }
        Ok(())
    }
}

/// One direct summand shape K[vars](-shift) of a Hilbert decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertComponent {
    pub vars: VarSet,
    pub shift: DegreeVector,
}

/// A list of components K[vars](-shift) whose Hilbert functions sum to the
/// Hilbert function of the module under study.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertDecomposition {
    components: Vec<HilbertComponent>,
}

impl HilbertDecomposition {
    pub fn new(components: Vec<HilbertComponent>) -> Self {
        HilbertDecomposition { components }
    }

    pub fn components(&self) -> &[HilbertComponent] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// min |vars| over the components; None when empty.
    pub fn min_vars(&self) -> Option<usize> {
        self.components.iter().map(|c| c.vars.len()).min()
    }

    /// Value of the decomposition's Hilbert function at a point.
    pub fn hilbert_value(&self, a: &DegreeVector) -> u64 {
        self.components
            .iter()
            .filter(|c| {
                if !c.shift.le(a) {
                    return false;
                }
                let d = a.minus(&c.shift);
                (0..d.len()).all(|j| d[j] == 0 || c.vars.contains(j + 1))
            })
            .count() as u64
    }

    /// The decomposition's Hilbert function restricted to [0,g]. Components
    /// with shift outside the box contribute nothing there.
    pub fn table(&self, g: &DegreeVector) -> Result<HilbertTable> {
        HilbertTable::from_fn(g, |a| self.hilbert_value(a))
    }
}

/// Depth of a partition: min rho over its upper corners, n when empty.
pub fn depth_of_partition(p: &HilbertPartition) -> usize {
    p.depth()
}

fn validate_depth_bound(t: &HilbertTable, d: usize) -> Result<()> {
    if d > t.n() {
        return Err(Error::Precondition(format!(
            "depth bound {d} exceeds the variable count {}",
            t.n()
        )));
    }
    Ok(())
}

/// The backtracking exact-cover state. `rem` mirrors the table's dense
/// layout; `stack` is the canonically sorted run-length list of choices.
#[derive(Clone)]
struct Engine<'a> {
    table: &'a HilbertTable,
    d: usize,
    interval_ok: Option<&'a (dyn Fn(&Interval) -> bool + Sync)>,
    rem: Vec<u64>,
    rem_total: u64,
    stack: Vec<(Interval, u64)>,
}

impl<'a> Engine<'a> {
    fn new(
        table: &'a HilbertTable,
        d: usize,
        interval_ok: Option<&'a (dyn Fn(&Interval) -> bool + Sync)>,
    ) -> Self {
        Engine {
            table,
            d,
            interval_ok,
            rem: table.values().to_vec(),
            rem_total: table.total_mass(),
            stack: Vec::new(),
        }
    }

    fn g(&self) -> &DegreeVector {
        self.table.g()
    }

    fn first_positive(&self, from: usize) -> usize {
        (from..self.rem.len())
            .find(|&o| self.rem[o] > 0)
            .expect("remaining mass positive")
    }

    fn fits(&self, iv: &Interval) -> bool {
        iv.points().all(|p| self.rem[self.table.offset(&p)] > 0)
    }

    fn apply(&mut self, iv: &Interval) {
        for p in iv.points() {
            self.rem[self.table.offset(&p)] -= 1;
        }
        self.rem_total -= iv.mass();
    }

    fn unapply(&mut self, iv: &Interval) {
        for p in iv.points() {
            self.rem[self.table.offset(&p)] += 1;
        }
        self.rem_total += iv.mass();
    }

    fn push(&mut self, iv: Interval) {
        match self.stack.last_mut() {
            Some((last, c)) if *last == iv => *c += 1,
            _ => self.stack.push((iv, 1)),
        }
    }

    fn pop(&mut self) {
        let (_, c) = self.stack.last_mut().expect("non-empty stack");
        if *c > 1 {
            *c -= 1;
        } else {
            self.stack.pop();
        }
    }

    /// Every remaining-positive point p must still be coverable: some upper
    /// corner b >= p with rho(b) >= d must exist whose interval [p,b] fits
    /// in the remaining table. Necessary because any interval covering p in
    /// a completion fits, and shrinking its lower corner to p keeps it
    /// fitting with the same upper corner. The dim<=1 interval filter is
    /// deliberately not applied here: a filtered cover of p may use a lower
    /// corner strictly below p, and the filter is not monotone under
    /// shrinking intervals.
    fn feasible(&self, cursor: usize) -> bool {
        for off in cursor..self.rem.len() {
            if self.rem[off] == 0 {
                continue;
            }
            let p = self.table.degree_at(off);
            let ok = sub_box_iter(&p, self.g()).any(|b| {
                rho_in_box(&b, self.g()) >= self.d
                    && self.fits(&Interval::new(p.clone(), b).expect("ordered corners"))
            });
            if !ok {
                return false;
            }
        }
        true
    }

    fn snapshot(&self) -> HilbertPartition {
        HilbertPartition::from_sorted(self.g().clone(), self.stack.clone())
    }

    fn recurse<F>(&mut self, cursor: usize, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(HilbertPartition) -> ControlFlow<()>,
    {
        if self.rem_total == 0 {
            return f(self.snapshot());
        }
        let cursor = self.first_positive(cursor);
        if self.d > 0 && !self.feasible(cursor) {
            return ControlFlow::Continue(());
        }
        let c = self.table.degree_at(cursor);
        let min_upper = match self.stack.last() {
            Some((iv, _)) if iv.lower() == &c => Some(iv.upper().clone()),
            _ => None,
        };
        let uppers: Vec<DegreeVector> = sub_box_iter(&c, self.g()).collect();
        for b in uppers {
            if rho_in_box(&b, self.g()) < self.d {
                continue;
            }
            if let Some(mu) = &min_upper {
                if b.lex_cmp(mu) == Ordering::Less {
                    continue;
                }
            }
            let iv = Interval::new(c.clone(), b).expect("ordered corners");
            if let Some(ok) = self.interval_ok {
                if !ok(&iv) {
                    continue;
                }
            }
            if !self.fits(&iv) {
                continue;
            }
            self.apply(&iv);
            self.push(iv.clone());
            let res = self.recurse(cursor, f);
            self.pop();
            self.unapply(&iv);
            if res.is_break() {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    }
}

/// Streams every partition of `t` with depth >= d to the visitor, in
/// canonical order, optionally admitting only intervals the filter accepts.
pub(crate) fn for_each_partition<F>(
    t: &HilbertTable,
    d: usize,
    interval_ok: Option<&(dyn Fn(&Interval) -> bool + Sync)>,
    f: &mut F,
) -> Result<()>
where
    F: FnMut(HilbertPartition) -> ControlFlow<()>,
{
    validate_depth_bound(t, d)?;
    let mut engine = Engine::new(t, d, interval_ok);
    let _ = engine.recurse(0, f);
    Ok(())
}

/// First partition of `t` with depth >= d in canonical order, if any. The
/// top-level branches run in parallel; the leftmost hit wins, so the result
/// does not depend on thread count.
pub fn exists_partition(t: &HilbertTable, d: usize) -> Result<Option<HilbertPartition>> {
    validate_depth_bound(t, d)?;
    let engine = Engine::new(t, d, None);
    if engine.rem_total == 0 {
        return Ok(Some(HilbertPartition::empty(t.g().clone())));
    }
    let cursor = engine.first_positive(0);
    if engine.d > 0 && !engine.feasible(cursor) {
        return Ok(None);
    }
    let c = t.degree_at(cursor);
    let branches: Vec<Interval> = sub_box_iter(&c, t.g())
        .filter(|b| rho_in_box(b, t.g()) >= d)
        .map(|b| Interval::new(c.clone(), b).expect("ordered corners"))
        .filter(|iv| engine.fits(iv))
        .collect();
    let hit = branches.par_iter().find_map_first(|iv| {
        let mut e = engine.clone();
        e.apply(iv);
        e.push(iv.clone());
        let mut out = None;
        let _ = e.recurse(cursor, &mut |p| {
            out = Some(p);
            ControlFlow::Break(())
        });
        out
    });
    Ok(hit)
}

/// All partitions with depth >= d in canonical order; `limit` truncates.
pub fn enumerate_partitions(
    t: &HilbertTable,
    d: usize,
    limit: Option<usize>,
) -> Result<Vec<HilbertPartition>> {
    let mut out = Vec::new();
    if limit == Some(0) {
        return Ok(out);
    }
    for_each_partition(t, d, None, &mut |p| {
        out.push(p);
        match limit {
            Some(l) if out.len() >= l => ControlFlow::Break(()),
            _ => ControlFlow::Continue(()),
        }
    })?;
    Ok(out)
}

/// Exact number of partitions with depth >= d.
pub fn count_partitions(t: &HilbertTable, d: usize) -> Result<u64> {
    let mut count = 0u64;
    for_each_partition(t, d, None, &mut |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

/// Hilbert depth of the table together with a witness partition realizing
/// it: the largest d admitting a partition of depth >= d. The zero table
/// yields (n, empty partition).
pub fn hdepth(t: &HilbertTable) -> (usize, HilbertPartition) {
    for d in (0..=t.n()).rev() {
        if let Some(p) = exists_partition(t, d).expect("d <= n") {
            return (d, p);
        }
    }
    unreachable!("every table admits its partition into points at d = 0")
}

/// The Hilbert decomposition induced by a partition: each interval [a,b]
/// contributes one component K[Z_b](-c) per corner c in G[a,b].
pub fn induced_decomposition(p: &HilbertPartition) -> HilbertDecomposition {
    let mut components = Vec::new();
    for (iv, count) in p.intervals() {
        let vars = z_set_in_box(iv.upper(), p.g());
        let corners = g_set(iv, p.g()).expect("interval inside the box");
        for _ in 0..*count {
            for c in &corners {
                components.push(HilbertComponent {
                    vars,
                    shift: c.clone(),
                });
            }
        }
    }
    HilbertDecomposition::new(components)
}

/// Rebuilds a partition from a decomposition of `table`'s Hilbert function:
/// each component K[vars](-s) becomes the interval [s, b] with b_j = g_j on
/// `vars` and b_j = s_j elsewhere. Components with shift outside [0,g] are
/// dropped (they contribute nothing inside the box). Fails with an
/// inconsistency error when the interval sum does not reproduce `table`,
/// which signals that the input was not a Hilbert decomposition of it.
pub fn partition_from_decomposition(
    dec: &HilbertDecomposition,
    table: &HilbertTable,
) -> Result<HilbertPartition> {
    let g = table.g();
    let mut intervals = Vec::new();
    for comp in dec.components() {
        if comp.shift.len() != g.len() {
            return Err(Error::DimensionMismatch {
                expected: g.len(),
                got: comp.shift.len(),
            });
        }
        if !comp.shift.is_nonnegative() {
            return Err(Error::Domain(format!(
                "component shift {} has a negative coordinate",
                comp.shift
            )));
        }
        if !comp.shift.le(g) {
            continue;
        }
        let b = DegreeVector::new(
            (0..g.len())
                .map(|j| {
                    if comp.vars.contains(j + 1) {
                        g[j]
                    } else {
                        comp.shift[j]
                    }
                })
                .collect(),
        );
        intervals.push((Interval::new(comp.shift.clone(), b)?, 1));
    }
    let p = HilbertPartition::new(g.clone(), intervals)?;
    p.validate_against(table)?;
    Ok(p)
}
