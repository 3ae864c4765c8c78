//! Shared fixtures and reference oracles for the integration suites.
//!
//! The oracles here deliberately avoid the library's search machinery: the
//! partition enumerator below recurses over a fixed list of candidate
//! intervals choosing a multiplicity for each, instead of branching on
//! lattice points, so agreement with the engine is meaningful evidence.

#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use hilbert_depth::{
    box_iter, parse_spec, rho, sub_box_iter, DegreeVector, HilbertPartition, HilbertTable,
    Interval, ModuleSpec, MonomialIdeal, Summand,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn dv(coords: &[i64]) -> DegreeVector {
    DegreeVector::new(coords.to_vec())
}

pub fn iv(lo: &[i64], up: &[i64]) -> Interval {
    Interval::new(dv(lo), dv(up)).expect("ordered corners")
}

pub fn partition(g: &[i64], intervals: &[(&[i64], &[i64], u64)]) -> HilbertPartition {
    let intervals = intervals
        .iter()
        .map(|(lo, up, c)| (iv(lo, up), *c))
        .collect();
    HilbertPartition::new(dv(g), intervals).expect("valid partition data")
}

pub fn read_testdata(name: &str) -> Vec<u8> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../testdata")
        .join(name);
    std::fs::read(&path).unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()))
}

pub fn spec_from_testdata(name: &str) -> ModuleSpec {
    parse_spec(&read_testdata(name)).expect("testdata module parses")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Naive reference enumerator: walk every interval of the box in a fixed
/// order and try every multiplicity that still fits under the remaining
/// table. Each interval multiset is produced exactly once. The single prune
/// is order-independent: once the first uncovered point precedes the current
/// interval's lower corner, no remaining interval can cover it, because an
/// interval covering p has lower corner <= p componentwise and the interval
/// list is sorted by lower corner in a linear extension of that order.
pub fn naive_enumerate(t: &HilbertTable, d: usize) -> Vec<HilbertPartition> {
    let g = t.g().clone();
    let points: Vec<(DegreeVector, u64)> = t.iter().collect();
    let index: HashMap<DegreeVector, usize> = points
        .iter()
        .enumerate()
        .map(|(i, (a, _))| (a.clone(), i))
        .collect();

    struct Candidate {
        lower_index: usize,
        interval: Interval,
        covered: Vec<usize>,
    }
    let mut candidates = Vec::new();
    for a in box_iter(&g) {
        for b in sub_box_iter(&a, &g) {
            if rho(&b, &g).expect("b in box") < d {
                continue;
            }
            let interval = Interval::new(a.clone(), b).expect("ordered corners");
            let covered: Vec<usize> = interval.points().map(|c| index[&c]).collect();
            candidates.push(Candidate {
                lower_index: index[&a],
                interval,
                covered,
            });
        }
    }
    candidates.sort_by_key(|c| (c.lower_index, c.covered.len()));

    fn recurse(
        pos: usize,
        rem: &mut [u64],
        chosen: &mut Vec<(Interval, u64)>,
        out: &mut Vec<HilbertPartition>,
        candidates: &[Candidate],
        g: &DegreeVector,
    ) {
        let first_gap = rem.iter().position(|&v| v > 0);
        let Some(first_gap) = first_gap else {
            out.push(HilbertPartition::new(g.clone(), chosen.clone()).expect("sums were tracked"));
            return;
        };
        if pos == candidates.len() || candidates[pos].lower_index > first_gap {
            return;
        }
        let c = &candidates[pos];
        let max_count = c.covered.iter().map(|&i| rem[i]).min().expect("nonempty");
        for count in (0..=max_count).rev() {
            for &i in &c.covered {
                rem[i] -= count;
            }
            if count > 0 {
                chosen.push((c.interval.clone(), count));
            }
            recurse(pos + 1, rem, chosen, out, candidates, g);
            if count > 0 {
                chosen.pop();
            }
            for &i in &c.covered {
                rem[i] += count;
            }
        }
    }

    let mut rem: Vec<u64> = points.iter().map(|(_, v)| *v).collect();
    let mut out = Vec::new();
    recurse(0, &mut rem, &mut Vec::new(), &mut out, &candidates, &g);
    out
}

pub fn naive_count(t: &HilbertTable, d: usize) -> u64 {
    naive_enumerate(t, d).len() as u64
}

pub fn naive_hdepth(t: &HilbertTable) -> usize {
    (0..=t.n())
        .rev()
        .find(|&d| !naive_enumerate(t, d).is_empty())
        .expect("the pointwise partition always exists at d = 0")
}

pub fn sorted_canonical(mut ps: Vec<HilbertPartition>) -> Vec<HilbertPartition> {
    ps.sort_by(|a, b| a.cmp_canonical(b));
    ps
}

/// Reference check that multiplication by every variable X_i is bijective
/// from each degree a with a_i >= g_i, verified pointwise on [0, hi]. Each
/// summand carries at most one basis element per degree, multiplication
/// stays inside the summand, and a monomial times a nonzero monomial class
/// is the class of the product, so bijectivity per degree is exactly
/// presence-for-presence agreement between a and a + e_i per summand.
pub fn is_g_determined(spec: &ModuleSpec, g: &DegreeVector, hi: &DegreeVector) -> bool {
    for a in box_iter(hi) {
        for i in 0..spec.n() {
            if a.as_slice()[i] < g.as_slice()[i] {
                continue;
            }
            let b = a.plus(&DegreeVector::unit(spec.n(), i + 1));
            for s in spec.summands() {
                if s.nonzero_at(&a) != s.nonzero_at(&b) {
                    return false;
                }
            }
        }
    }
    true
}

/// A table with independently random entries; roughly `zero_bias` of the
/// points are forced to zero to keep masses moderate.
pub fn random_table(
    rng: &mut ChaCha8Rng,
    g: &[i64],
    max_entry: u64,
    zero_bias: f64,
) -> HilbertTable {
    let g = dv(g);
    HilbertTable::from_fn(&g, |_| {
        if rng.gen_bool(zero_bias) {
            0
        } else {
            rng.gen_range(0..=max_entry)
        }
    })
    .expect("nonnegative box")
}

/// A uniformly haphazard (not uniformly distributed) partition of `t`:
/// repeatedly cover the first uncovered point with a random admissible
/// interval and multiplicity. Always terminates because the point interval
/// with count 1 is admissible.
pub fn random_partition(rng: &mut ChaCha8Rng, t: &HilbertTable) -> HilbertPartition {
    let g = t.g().clone();
    let points: Vec<DegreeVector> = t.iter().map(|(a, _)| a).collect();
    let index: HashMap<DegreeVector, usize> = points
        .iter()
        .enumerate()
        .map(|(a, b)| (b.clone(), a))
        .collect();
    let mut rem: Vec<u64> = t.iter().map(|(_, v)| v).collect();
    let mut chosen: Vec<(Interval, u64)> = Vec::new();
    while let Some(pos) = rem.iter().position(|&v| v > 0) {
        let a = points[pos].clone();
        let uppers: Vec<DegreeVector> = sub_box_iter(&a, &g)
            .filter(|b| sub_box_iter(&a, b).all(|c| rem[index[&c]] > 0))
            .collect();
        let b = uppers[rng.gen_range(0..uppers.len())].clone();
        let interval = Interval::new(a, b).expect("ordered corners");
        let max_count = interval
            .points()
            .map(|c| rem[index[&c]])
            .min()
            .expect("nonempty interval");
        let count = rng.gen_range(1..=max_count);
        for c in interval.points() {
            rem[index[&c]] -= count;
        }
        chosen.push((interval, count));
    }
    HilbertPartition::new(g, chosen).expect("covers the table by construction")
}

/// A random monomial ideal with at most `max_gens` generators, exponents
/// bounded by `emax` in every coordinate.
pub fn random_ideal(rng: &mut ChaCha8Rng, n: usize, emax: i64, max_gens: usize) -> MonomialIdeal {
    let k = rng.gen_range(0..=max_gens);
    let gens = (0..k)
        .map(|_| DegreeVector::new((0..n).map(|_| rng.gen_range(0..=emax)).collect()))
        .collect();
    MonomialIdeal::new(n, gens).expect("nonnegative exponents")
}

/// A random subquotient summand x^shift (I/J) with J built inside I by
/// multiplying its generators, so the containment always holds.
pub fn random_summand(rng: &mut ChaCha8Rng, n: usize, emax: i64) -> Summand {
    let numerator = random_ideal(rng, n, emax, 3);
    let denominator = match rng.gen_range(0..4u8) {
        0 => MonomialIdeal::zero(n),
        1 => numerator.clone(),
        _ => {
            let gens = numerator
                .gens()
                .iter()
                .map(|e| {
                    let extra = DegreeVector::new((0..n).map(|_| rng.gen_range(0..=1)).collect());
                    e.plus(&extra)
                })
                .collect();
            MonomialIdeal::new(n, gens).expect("nonnegative exponents")
        }
    };
    let shift = DegreeVector::new((0..n).map(|_| rng.gen_range(0..=1)).collect());
    Summand::new(shift, numerator, denominator).expect("containment holds by construction")
}

pub fn random_spec(rng: &mut ChaCha8Rng, n: usize, emax: i64, max_summands: usize) -> ModuleSpec {
    let k = rng.gen_range(1..=max_summands);
    let summands = (0..k).map(|_| random_summand(rng, n, emax)).collect();
    ModuleSpec::with_default_names(n, summands).expect("valid random summands")
}

pub fn plain_ideal_spec(n: usize, ideal: MonomialIdeal) -> ModuleSpec {
    let summand = Summand::new(DegreeVector::zero(n), ideal, MonomialIdeal::zero(n))
        .expect("plain ideal summand");
    ModuleSpec::with_default_names(n, vec![summand]).expect("valid spec")
}

/// The thirteen depth-1 partitions of the two-summand box (1,1) example,
/// copied by hand for exact-set comparison.
pub fn frozen_thirteen() -> Vec<HilbertPartition> {
    let g = &[1, 1];
    vec![
        partition(
            g,
            &[
                (&[0, 0], &[1, 1], 1),
                (&[0, 1], &[0, 1], 1),
                (&[1, 0], &[1, 1], 1),
            ],
        ),
        partition(
            g,
            &[
                (&[0, 0], &[1, 1], 1),
                (&[0, 1], &[1, 1], 1),
                (&[1, 0], &[1, 0], 1),
            ],
        ),
        partition(
            g,
            &[
                (&[0, 0], &[1, 1], 1),
                (&[0, 1], &[0, 1], 1),
                (&[1, 0], &[1, 0], 1),
                (&[1, 1], &[1, 1], 1),
            ],
        ),
        partition(
            g,
            &[
                (&[0, 0], &[1, 0], 1),
                (&[0, 1], &[0, 1], 2),
                (&[1, 0], &[1, 1], 1),
                (&[1, 1], &[1, 1], 1),
            ],
        ),
        partition(
            g,
            &[
                (&[0, 0], &[1, 0], 1),
                (&[0, 1], &[0, 1], 1),
                (&[0, 1], &[1, 1], 1),
                (&[1, 0], &[1, 1], 1),
            ],
        ),
        partition(
            g,
            &[
                (&[0, 0], &[1, 0], 1),
                (&[0, 1], &[1, 1], 2),
                (&[1, 0], &[1, 0], 1),
            ],
        ),
        partition(
            g,
            &[
                (&[0, 0], &[1, 0], 1),
                (&[0, 1], &[0, 1], 1),
                (&[0, 1], &[1, 1], 1),
                (&[1, 0], &[1, 0], 1),
                (&[1, 1], &[1, 1], 1),
            ],
        ),
        partition(
            g,
            &[
                (&[0, 0], &[1, 0], 1),
                (&[0, 1], &[0, 1], 2),
                (&[1, 0], &[1, 0], 1),
                (&[1, 1], &[1, 1], 2),
            ],
        ),
        partition(
            g,
            &[
                (&[0, 0], &[0, 1], 1),
                (&[0, 1], &[1, 1], 1),
                (&[1, 0], &[1, 0], 2),
                (&[1, 1], &[1, 1], 1),
            ],
        ),
        partition(
            g,
            &[
                (&[0, 0], &[0, 1], 1),
                (&[0, 1], &[0, 1], 1),
                (&[1, 0], &[1, 1], 2),
            ],
        ),
        partition(
            g,
            &[
                (&[0, 0], &[0, 1], 1),
                (&[0, 1], &[1, 1], 1),
                (&[1, 0], &[1, 0], 1),
                (&[1, 0], &[1, 1], 1),
            ],
        ),
        partition(
            g,
            &[
                (&[0, 0], &[0, 1], 1),
                (&[0, 1], &[0, 1], 1),
                (&[1, 0], &[1, 0], 1),
                (&[1, 0], &[1, 1], 1),
                (&[1, 1], &[1, 1], 1),
            ],
        ),
        partition(
            g,
            &[
                (&[0, 0], &[0, 1], 1),
                (&[0, 1], &[0, 1], 1),
                (&[1, 0], &[1, 0], 2),
                (&[1, 1], &[1, 1], 2),
            ],
        ),
    ]
}
