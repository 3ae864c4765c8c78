//! Output shapes: JSON values that round-trip through the input parsers,
//! and text renderings for terminals.

use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use crate::lattice::{DegreeVector, VarSet};
use crate::module::ModuleSpec;
use crate::partition::{HilbertComponent, HilbertDecomposition, HilbertPartition};
use crate::stanley::{StanleyDecomposition, StanleyPart};
use crate::table::{monomial_string, HilbertTable};

pub fn degree_json(a: &DegreeVector) -> Value {
    json!(a.as_slice())
}

/// Sparse table rendering: nonzero entries in lexicographic order.
pub fn table_json(t: &HilbertTable) -> Value {
    let entries: Vec<Value> = t
        .iter()
        .filter(|(_, v)| *v > 0)
        .map(|(a, v)| json!({"degree": a.as_slice(), "value": v}))
        .collect();
    Value::Array(entries)
}

/// Matches the partition input format.
pub fn partition_json(p: &HilbertPartition) -> Value {
    let intervals: Vec<Value> = p
        .intervals()
        .iter()
        .map(|(iv, count)| {
            json!({
                "lower": iv.lower().as_slice(),
                "upper": iv.upper().as_slice(),
                "count": count,
            })
        })
        .collect();
    json!({"g": p.g().as_slice(), "intervals": intervals})
}

pub fn decomposition_json(dec: &HilbertDecomposition) -> Value {
    let components: Vec<Value> = dec
        .components()
        .iter()
        .map(|c| {
            json!({
                "vars": c.vars.indices().collect::<Vec<_>>(),
                "shift": c.shift.as_slice(),
            })
        })
        .collect();
    Value::Array(components)
}

/// Matches the certificate input format: coefficients are emitted as
/// strings in degreewise basis order, so the value can be fed back to the
/// checker verbatim.
pub fn candidate_json(spec: &ModuleSpec, sd: &StanleyDecomposition) -> Value {
    let components: Vec<Value> = sd
        .parts()
        .iter()
        .map(|part| {
            let basis = spec.component_basis(part.degree());
            let choice: Vec<Value> = basis
                .iter()
                .map(|e| {
                    let coeff = part
                        .generator()
                        .iter()
                        .find(|(b, _)| b == e)
                        .map_or_else(|| "0".to_string(), |(_, c)| rational_string(c));
                    Value::String(coeff)
                })
                .collect();
            json!({
                "vars": part.vars().indices().collect::<Vec<_>>(),
                "shift": part.degree().as_slice(),
                "choice": choice,
            })
        })
        .collect();
    json!({ "components": components })
}

/// Matches the module input format. The numerator is always explicit, so
/// free summands come back as `[[0, ...]]` and zero summands as `[]`.
pub fn spec_json(spec: &ModuleSpec) -> Value {
    let summands: Vec<Value> = spec
        .summands()
        .iter()
        .map(|s| {
            json!({
                "shift": s.shift().as_slice(),
                "numerator_gens": s.numerator().gens().iter().map(|g| g.as_slice()).collect::<Vec<_>>(),
                "denominator_gens": s.denominator().gens().iter().map(|g| g.as_slice()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut out = json!({"vars": spec.vars(), "summands": summands});
    if let Some(g) = spec.g_override() {
        out["g"] = json!(g.as_slice());
    }
    out
}

pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// "K[X1,X2]", or "K" for the empty set.
pub fn format_vars(vars: VarSet, names: &[String]) -> String {
    if vars.is_empty() {
        return "K".to_string();
    }
    let list: Vec<&str> = vars.indices().map(|j| names[j - 1].as_str()).collect();
    format!("K[{}]", list.join(","))
}

/// "K[X1,X2](-(0,1))".
pub fn format_component(comp: &HilbertComponent, names: &[String]) -> String {
    format!("{}(-{})", format_vars(comp.vars, names), comp.shift)
}

/// A generator as a tuple over the summands, followed by its algebra:
/// "(0, X1) * K[X1,X2]". Slot k holds the part's coefficient times the
/// degree's monomial if summand k appears in the generator, else 0.
pub fn format_stanley_part(part: &StanleyPart, spec: &ModuleSpec) -> String {
    let monomial = monomial_string(part.degree(), spec.vars());
    let slots: Vec<String> = (0..spec.summands().len())
        .map(
            |k| match part.generator().iter().find(|(e, _)| e.summand_index == k) {
                None => "0".to_string(),
                Some((_, c)) => {
                    if c.is_one() {
                        monomial.clone()
                    } else if (-c).is_one() {
                        format!("-{monomial}")
                    } else if monomial == "1" {
                        rational_string(c)
                    } else {
                        format!("{}*{monomial}", rational_string(c))
                    }
                }
            },
        )
        .collect();
    let tuple = if slots.len() == 1 {
        slots.into_iter().next().expect("one slot")
    } else {
        format!("({})", slots.join(", "))
    };
    format!("{tuple} * {}", format_vars(part.vars(), spec.vars()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    use crate::lattice::Interval;
    use crate::module::{ComponentBasisElement, MonomialIdeal, Summand};
    use crate::parse::{parse_candidate, parse_partition, parse_spec};
    use crate::stanley::{check_stanley_candidate, stdepth};

    fn dv(c: &[i64]) -> DegreeVector {
        DegreeVector::new(c.to_vec())
    }

    fn vs(indices: &[usize], n: usize) -> VarSet {
        VarSet::from_indices(indices.iter().copied(), n).unwrap()
    }

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn free_plus_ideal() -> ModuleSpec {
        ModuleSpec::with_default_names(
            2,
            vec![
                Summand::new(dv(&[0, 0]), MonomialIdeal::unit(2), MonomialIdeal::zero(2)).unwrap(),
                Summand::new(
                    dv(&[0, 0]),
                    MonomialIdeal::new(2, vec![dv(&[1, 0]), dv(&[0, 1])]).unwrap(),
                    MonomialIdeal::zero(2),
                )
                .unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn table_and_partition_json() {
        let t = HilbertTable::from_values(&dv(&[1, 1]), vec![1, 2, 0, 1]).unwrap();
        assert_eq!(
            table_json(&t),
            json!([
                {"degree": [0, 0], "value": 1},
                {"degree": [0, 1], "value": 2},
                {"degree": [1, 1], "value": 1},
            ])
        );
        let p = HilbertPartition::new(
            dv(&[1, 1]),
            vec![
                (Interval::new(dv(&[0, 0]), dv(&[0, 1])).unwrap(), 1),
                (Interval::new(dv(&[1, 0]), dv(&[1, 1])).unwrap(), 2),
            ],
        )
        .unwrap();
        let value = partition_json(&p);
        assert_eq!(value["g"], json!([1, 1]));
        assert_eq!(value["intervals"][1]["count"], json!(2));
        // Round trip through the parser.
        let bytes = serde_json::to_vec(&value).unwrap();
        let back = parse_partition(&bytes)
            .unwrap()
            .into_partition(&dv(&[1, 1]))
            .unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = free_plus_ideal();
        let bytes = serde_json::to_vec(&spec_json(&spec)).unwrap();
        let back = parse_spec(&bytes).unwrap();
        assert_eq!(back, spec);
        // The zero ideal stays distinguishable from the unit ideal.
        let zero = ModuleSpec::with_default_names(
            1,
            vec![Summand::new(dv(&[0]), MonomialIdeal::zero(1), MonomialIdeal::zero(1)).unwrap()],
        )
        .unwrap();
        let bytes = serde_json::to_vec(&spec_json(&zero)).unwrap();
        assert_eq!(parse_spec(&bytes).unwrap(), zero);
    }

    #[test]
    fn candidate_json_round_trip() {
        let spec = free_plus_ideal();
        let g = dv(&[1, 1]);
        let (d, sd) = stdepth(&spec, &g).unwrap();
        assert_eq!(d, 1);
        let bytes = serde_json::to_vec(&candidate_json(&spec, &sd)).unwrap();
        let cand = parse_candidate(&bytes).unwrap().into_candidate(2).unwrap();
        assert!(check_stanley_candidate(&spec, &g, &cand).unwrap());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_string(&q(5)), "5");
        assert_eq!(rational_string(&q(-5)), "-5");
        assert_eq!(rational_string(&BigRational::zero()), "0");
        assert_eq!(
            rational_string(&BigRational::new(BigInt::from(-2), BigInt::from(6))),
            "-1/3"
        );
    }

    #[test]
    fn pretty_formats() {
        let names = vec!["X1".to_string(), "X2".to_string()];
        assert_eq!(format_vars(VarSet::empty(), &names), "K");
        assert_eq!(format_vars(vs(&[1, 2], 2), &names), "K[X1,X2]");
        let comp = HilbertComponent {
            vars: vs(&[2], 2),
            shift: dv(&[0, 1]),
        };
        assert_eq!(format_component(&comp, &names), "K[X2](-(0,1))");

        let spec = free_plus_ideal();
        let part = StanleyPart::new(
            vec![(
                ComponentBasisElement {
                    summand_index: 1,
                    degree: dv(&[1, 0]),
                },
                q(1),
            )],
            vs(&[1, 2], 2),
        )
        .unwrap();
        assert_eq!(format_stanley_part(&part, &spec), "(0, X1) * K[X1,X2]");
        let part = StanleyPart::new(
            vec![(
                ComponentBasisElement {
                    summand_index: 0,
                    degree: dv(&[0, 0]),
                },
                q(1),
            )],
            vs(&[1, 2], 2),
        )
        .unwrap();
        assert_eq!(format_stanley_part(&part, &spec), "(1, 0) * K[X1,X2]");
        let part = StanleyPart::new(
            vec![
                (
                    ComponentBasisElement {
                        summand_index: 0,
                        degree: dv(&[0, 1]),
                    },
                    BigRational::new(BigInt::from(1), BigInt::from(2)),
                ),
                (
                    ComponentBasisElement {
                        summand_index: 1,
                        degree: dv(&[0, 1]),
                    },
                    q(-1),
                ),
            ],
            vs(&[2], 2),
        )
        .unwrap();
        assert_eq!(format_stanley_part(&part, &spec), "(1/2*X2, -X2) * K[X2]");

        // Single-summand modules drop the tuple.
        let single = ModuleSpec::with_default_names(
            1,
            vec![Summand::new(dv(&[0]), MonomialIdeal::unit(1), MonomialIdeal::zero(1)).unwrap()],
        )
        .unwrap();
        let part = StanleyPart::new(
            vec![(
                ComponentBasisElement {
                    summand_index: 0,
                    degree: dv(&[0]),
                },
                q(1),
            )],
            vs(&[1], 1),
        )
        .unwrap();
        assert_eq!(format_stanley_part(&part, &single), "1 * K[X1]");
    }
}
