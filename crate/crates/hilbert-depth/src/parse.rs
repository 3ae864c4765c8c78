//! JSON input formats for module presentations, partitions, and Stanley
//! certificates.
//!
//! Parsing is strict: unknown fields are rejected, every coordinate and
//! count is capped, and rationals use the exact grammar `-?digits(/digits)?`
//! so that untrusted input can never panic the arithmetic underneath.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::lattice::{DegreeVector, Interval, VarSet};
use crate::module::{ModuleSpec, MonomialIdeal, Summand};
use crate::partition::{HilbertComponent, HilbertDecomposition, HilbertPartition};
use crate::stanley::StanleyCandidate;

/// Largest accepted coordinate in shifts, generators, bounds and corners.
pub const MAX_COORD: i64 = 1 << 20;
/// Largest accepted interval multiplicity.
pub const MAX_COUNT: u64 = u32::MAX as u64;
/// Largest accepted list length (summands, generators, intervals, parts).
pub const MAX_ITEMS: usize = 1 << 16;
/// Longest accepted rational literal.
pub const MAX_RATIONAL_LEN: usize = 128;

fn as_parse(e: Error) -> Error {
    match e {
        Error::Parse(_) => e,
        other => Error::Parse(other.to_string()),
    }
}

fn check_len<T>(items: &[T], what: &str) -> Result<()> {
    if items.len() > MAX_ITEMS {
        return Err(Error::Parse(format!(
            "{what} count {} exceeds the limit {MAX_ITEMS}",
            items.len()
        )));
    }
    Ok(())
}

fn check_coords(coords: &[i64], what: &str) -> Result<()> {
    for &c in coords {
        if !(0..=MAX_COORD).contains(&c) {
            return Err(Error::Parse(format!(
                "{what} coordinate {c} outside 0..={MAX_COORD}"
            )));
        }
    }
    Ok(())
}

/// A module presentation:
///
/// ```json
/// {
///   "vars": ["X1", "X2"],
///   "summands": [
///     {"shift": [0, 1], "numerator_gens": [[0, 0]], "denominator_gens": [[1, 0]]}
///   ],
///   "g": [1, 1]
/// }
/// ```
///
/// `numerator_gens` omitted means the unit ideal (a free summand), while an
/// explicit `[]` is the zero ideal; `denominator_gens` defaults to the zero
/// ideal. `g` optionally overrides the determining degree and must dominate
/// the computed one.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecInput {
    vars: Vec<String>,
    summands: Vec<SummandInput>,
    #[serde(default)]
    g: Option<Vec<i64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SummandInput {
    shift: Vec<i64>,
    #[serde(default)]
    numerator_gens: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    denominator_gens: Vec<Vec<i64>>,
}

pub fn parse_spec(bytes: &[u8]) -> Result<ModuleSpec> {
    let input: SpecInput = serde_json::from_slice(bytes)
        .map_err(|e| Error::Parse(format!("invalid module JSON: {e}")))?;
    spec_from_input(input).map_err(as_parse)
}

fn spec_from_input(input: SpecInput) -> Result<ModuleSpec> {
    check_len(&input.vars, "variable")?;
    check_len(&input.summands, "summand")?;
    let n = input.vars.len();
    let mut summands = Vec::with_capacity(input.summands.len());
    for s in input.summands {
        check_coords(&s.shift, "shift")?;
        let numerator = match s.numerator_gens {
            None => MonomialIdeal::unit(n),
            Some(gens) => ideal_from_gens(n, gens, "numerator")?,
        };
        let denominator = ideal_from_gens(n, s.denominator_gens, "denominator")?;
        summands.push(Summand::new(
            DegreeVector::new(s.shift),
            numerator,
            denominator,
        )?);
    }
    let g = match input.g {
        None => None,
        Some(g) => {
            check_coords(&g, "g")?;
            Some(DegreeVector::new(g))
        }
    };
    ModuleSpec::new(input.vars, summands, g)
}

fn ideal_from_gens(n: usize, gens: Vec<Vec<i64>>, what: &str) -> Result<MonomialIdeal> {
    check_len(&gens, what)?;
    let mut out = Vec::with_capacity(gens.len());
    for gen in gens {
        check_coords(&gen, what)?;
        out.push(DegreeVector::new(gen));
    }
    MonomialIdeal::new(n, out)
}

/// A partition:
///
/// ```json
/// {"g": [1, 1], "intervals": [{"lower": [0, 0], "upper": [0, 1], "count": 1}]}
/// ```
///
/// `g` is optional and, when present, must match the box the partition is
/// used against; `count` defaults to 1.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionInput {
    #[serde(default)]
    g: Option<Vec<i64>>,
    intervals: Vec<IntervalInput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct IntervalInput {
    lower: Vec<i64>,
    upper: Vec<i64>,
    #[serde(default = "default_count")]
    count: u64,
}

fn default_count() -> u64 {
    1
}

pub fn parse_partition(bytes: &[u8]) -> Result<PartitionInput> {
    let input: PartitionInput = serde_json::from_slice(bytes)
        .map_err(|e| Error::Parse(format!("invalid partition JSON: {e}")))?;
    if let Some(g) = &input.g {
        check_coords(g, "g")?;
    }
    check_len(&input.intervals, "interval")?;
    for iv in &input.intervals {
        check_coords(&iv.lower, "lower corner")?;
        check_coords(&iv.upper, "upper corner")?;
        if !(1..=MAX_COUNT).contains(&iv.count) {
            return Err(Error::Parse(format!(
                "interval count {} outside 1..={MAX_COUNT}",
                iv.count
            )));
        }
    }
    Ok(input)
}

impl PartitionInput {
    pub fn stored_g(&self) -> Option<DegreeVector> {
        self.g.as_ref().map(|g| DegreeVector::new(g.clone()))
    }

    /// Realizes the intervals over the box [0,g], insisting that any stored
    /// g agrees with it.
    pub fn into_partition(self, g: &DegreeVector) -> Result<HilbertPartition> {
        if let Some(stored) = self.stored_g() {
            if &stored != g {
                return Err(Error::Precondition(format!(
                    "partition declares g = {stored} but the module's box uses g = {g}"
                )));
            }
        }
        let mut intervals = Vec::with_capacity(self.intervals.len());
        for iv in self.intervals {
            intervals.push((
                Interval::new(DegreeVector::new(iv.lower), DegreeVector::new(iv.upper))?,
                iv.count,
            ));
        }
        HilbertPartition::new(g.clone(), intervals)
    }
}

/// A Stanley certificate:
///
/// ```json
/// {"components": [
///   {"vars": [1, 2], "shift": [0, 0], "choice": ["1"]},
///   {"vars": [2], "shift": [0, 1], "choice": [0, "-2/3"]}
/// ]}
/// ```
///
/// `vars` lists 1-based variable indices; `choice` gives one coefficient
/// per degreewise basis element of the shift degree, as integers or
/// rational strings.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CandidateInput {
    components: Vec<ComponentInput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentInput {
    vars: Vec<usize>,
    shift: Vec<i64>,
    choice: Vec<RationalInput>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RationalInput {
    Int(i64),
    Str(String),
}

pub fn parse_candidate(bytes: &[u8]) -> Result<CandidateInput> {
    let input: CandidateInput = serde_json::from_slice(bytes)
        .map_err(|e| Error::Parse(format!("invalid certificate JSON: {e}")))?;
    check_len(&input.components, "component")?;
    for comp in &input.components {
        check_len(&comp.vars, "variable index")?;
        check_coords(&comp.shift, "shift")?;
        check_len(&comp.choice, "choice")?;
        for v in &comp.vars {
            if !(1..=VarSet::MAX_VARS).contains(v) {
                return Err(Error::Parse(format!(
                    "variable index {v} outside 1..={}",
                    VarSet::MAX_VARS
                )));
            }
        }
        for c in &comp.choice {
            if let RationalInput::Str(s) = c {
                if s.len() > MAX_RATIONAL_LEN {
                    return Err(Error::Parse(format!(
                        "rational literal longer than {MAX_RATIONAL_LEN} characters"
                    )));
                }
            }
        }
    }
    Ok(input)
}

impl CandidateInput {
    /// Realizes the certificate over a ring with `n` variables.
    pub fn into_candidate(self, n: usize) -> Result<StanleyCandidate> {
        let mut components = Vec::with_capacity(self.components.len());
        let mut choices = Vec::with_capacity(self.components.len());
        for comp in self.components {
            let vars = VarSet::from_indices(comp.vars, n)?;
            components.push(HilbertComponent {
                vars,
                shift: DegreeVector::new(comp.shift),
            });
            let mut choice = Vec::with_capacity(comp.choice.len());
            for c in comp.choice {
                choice.push(match c {
                    RationalInput::Int(v) => BigRational::from_integer(BigInt::from(v)),
                    RationalInput::Str(s) => parse_rational(&s)?,
                });
            }
            choices.push(choice);
        }
        StanleyCandidate::new(HilbertDecomposition::new(components), choices)
    }
}

/// Parses `-?digits(/digits)?` with a nonzero denominator. Stricter than
/// the stock rational parser, which accepts forms this format does not and
/// panics on a zero denominator.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational literal \"{s}\""));
    if s.is_empty() || s.len() > MAX_RATIONAL_LEN {
        return Err(bad());
    }
    let (num_str, den_str) = match s.split_once('/') {
        None => (s, "1"),
        Some((n, d)) => (n, d),
    };
    let digits = num_str.strip_prefix('-').unwrap_or(num_str);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    if den_str.is_empty() || !den_str.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let num: BigInt = num_str.parse().map_err(|_| bad())?;
    let den: BigInt = den_str.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(Error::Parse(format!("zero denominator in \"{s}\"")));
    }
    Ok(BigRational::new(num, den))
}
