use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use super::document::{Cell, Document, Layout, Table};
use crate::basischange::{
    boolean_in_characters_with, boolean_kerov_polynomial_with, check_boolean_expansion,
    display_order, verify_theorems, BasisChangeOptions, Check, CumulantSign,
};
use crate::combinatorics::{
    conjugacy_class_size, enumerate_partitions, partitions_up_to, CycleType, Partition,
};
use crate::error::{Error, Result};
use crate::exactmath::{apply_iota, to_integer, GradedPolynomial, Rational};
use crate::heiscalc::{
    aggregate_by_cycle_type, bubble_move_full, check_expansion, expand_dotted_strands, y_to_x,
    AlphaReducer, CollisionRule, ExtractionOrder,
};
use crate::observables::{
    dimension, mn_character_unnormalized, moment_cumulant_check, observable, profile_coordinates,
    transition_measure, ObservableKind,
};

/// What `observables` prints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ObservablesKind {
    Moment,
    Boolean,
    TwistedBoolean,
    Free,
    Profile,
    Transition,
}

/// Deliberate defects used to confirm that `verify` can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mutation {
    /// Evaluate at `B_j` instead of the twisted `-B_j`.
    PlainSign,
    /// Drop the extra dot created when a curl is resolved.
    NoCurlDot,
}

impl Mutation {
    fn options(self) -> BasisChangeOptions {
        match self {
            Mutation::PlainSign => BasisChangeOptions {
                sign: CumulantSign::Plain,
                ..BasisChangeOptions::default()
            },
            Mutation::NoCurlDot => BasisChangeOptions::default(),
        }
    }

    fn reducer(self) -> AlphaReducer {
        match self {
            Mutation::PlainSign => AlphaReducer::new(),
            Mutation::NoCurlDot => AlphaReducer::new().with_curl_dot_increment(0),
        }
    }
}

fn options(m: Option<Mutation>) -> BasisChangeOptions {
    m.map_or_else(BasisChangeOptions::default, Mutation::options)
}

fn reducer(m: Option<Mutation>) -> AlphaReducer {
    m.map_or_else(AlphaReducer::new, Mutation::reducer)
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

pub fn observables(lambda: &Partition, kind: ObservablesKind, max_k: usize) -> Document {
    let kind_name = clap::ValueEnum::to_possible_value(&kind)
        .expect("not skipped")
        .get_name()
        .to_string();
    let mut p = vec![
        ("lambda", json!(lambda.to_string())),
        ("kind", json!(kind_name)),
    ];
    let (layout, table) = match kind {
        ObservablesKind::Profile => {
            let prof = profile_coordinates(lambda);
            let mut t = Table::new(&["minima", "maxima"]);
            t.push(vec![
                Cell::int_list(&prof.minima),
                Cell::int_list(&prof.maxima),
            ]);
            (Layout::Record, t)
        }
        ObservablesKind::Transition => {
            let mut t = Table::new(&["x", "weight"]);
            for (x, w) in transition_measure(lambda).atoms {
                t.push(vec![Cell::int(x), Cell::rational(&w)]);
            }
            (Layout::Grid, t)
        }
        _ => {
            p.push(("max-k", json!(max_k)));
            let (obs, prefix) = match kind {
                ObservablesKind::Moment => (ObservableKind::Moment, "M"),
                ObservablesKind::Boolean => (ObservableKind::Boolean, "B"),
                ObservablesKind::TwistedBoolean => (ObservableKind::TwistedBoolean, "Bhat"),
                _ => (ObservableKind::Free, "R"),
            };
            let v = observable(lambda, obs, max_k);
            let names: Vec<String> = (1..=max_k).map(|k| format!("{prefix}{k}")).collect();
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            let mut t = Table::new(&names);
            t.push(v.values.iter().map(Cell::rational).collect());
            (Layout::Grid, t)
        }
    };
    Document::new("observables", params(&p), layout, table)
}

fn iota_eigenvalue(p: &GradedPolynomial) -> Option<i32> {
    let q = apply_iota(p);
    if q == *p {
        Some(1)
    } else if q == -p {
        Some(-1)
    } else {
        None
    }
}

pub fn kerov_boolean(max_pi_size: u32, mutation: Option<Mutation>) -> Result<Document> {
    let opts = options(mutation);
    let mut reducer = reducer(mutation);
    let mut table = Table::new(&["pi", "polynomial", "degree", "iota", "agreement"]);
    let mut failures = Vec::new();
    for n in 1..=max_pi_size {
        for pi in enumerate_partitions(n) {
            let solver = boolean_kerov_polynomial_with(&pi, &opts)?.polynomial;
            let dots = vec![0; n as usize];
            let diagram = reducer.reduce_alpha(&pi, &dots).map(|p| y_to_x(&p));
            let agree = matches!(&diagram, Ok(d) if *d == solver);
            if !agree {
                let other = match &diagram {
                    Ok(d) => d.to_string(),
                    Err(e) => e.to_string(),
                };
                failures.push(format!(
                    "P_{pi}: solver route gives {solver}, diagrammatic route gives {other}"
                ));
            }
            let degree = match solver.weighted_degree() {
                Some(d) => Cell::int(d),
                None => Cell {
                    text: "-".into(),
                    latex: None,
                    json: Value::Null,
                },
            };
            let iota = match iota_eigenvalue(&solver) {
                Some(e) => Cell {
                    text: if e > 0 { "+1".into() } else { "-1".into() },
                    latex: Some(format!("${}1$", if e > 0 { "+" } else { "-" })),
                    json: json!(e),
                },
                None => Cell {
                    text: "none".into(),
                    latex: None,
                    json: Value::Null,
                },
            };
            table.push(vec![
                Cell::partition(&pi),
                Cell::polynomial(&solver),
                degree,
                iota,
                Cell::flag(agree),
            ]);
        }
    }
    let mut doc = Document::new(
        "kerov-boolean",
        params(&[("max-pi-size", json!(max_pi_size))]),
        Layout::Grid,
        table,
    );
    doc.failures = failures;
    Ok(doc)
}

fn sorted_terms(map: &BTreeMap<Partition, BigInt>) -> Vec<(Partition, BigInt)> {
    let mut terms: Vec<(Partition, BigInt)> =
        map.iter().map(|(p, c)| (p.clone(), c.clone())).collect();
    terms.sort_by(|a, b| display_order(&a.0, &b.0));
    terms
}

fn integral(map: &BTreeMap<Partition, Rational>) -> Result<BTreeMap<Partition, BigInt>> {
    map.iter()
        .map(|(p, c)| {
            to_integer(c)
                .map(|v| (p.clone(), v))
                .ok_or_else(|| Error::InvariantViolation(format!("m_{p} = {c} is not an integer")))
        })
        .collect()
}

pub fn expand_boolean(max_k: u32, mutation: Option<Mutation>) -> Result<Document> {
    let opts = options(mutation);
    let strands = expand_dotted_strands(max_k - 2, CollisionRule::WithOverlaps);
    let mut table = Table::new(&["k", "expansion", "support", "parity", "agreement"]);
    let mut failures = Vec::new();
    for k in 2..=max_k {
        let sol = boolean_in_characters_with(k, &opts)?;
        let checks = check_boolean_expansion(k, &sol.coefficients);
        let coeffs = integral(&sol.coefficients)?;
        let strand = &strands[(k - 2) as usize];
        check_expansion(k - 2, strand)?;
        let diagram = aggregate_by_cycle_type(strand);
        let agree = diagram == coeffs;
        if !agree {
            failures.push(format!(
                "k={k}: solver route gives {}, diagrammatic route gives {}",
                Cell::expansion(&sorted_terms(&coeffs)).text,
                Cell::expansion(&sorted_terms(&diagram)).text
            ));
        }
        for (prop, witness) in &checks {
            if let Some(w) = witness {
                failures.push(format!("k={k}: {prop} fails: {w}"));
            }
        }
        table.push(vec![
            Cell::int(k),
            Cell::expansion(&sorted_terms(&coeffs)),
            Cell::flag(checks[2].1.is_none()),
            Cell::flag(checks[3].1.is_none()),
            Cell::flag(agree),
        ]);
    }
    let mut doc = Document::new(
        "expand-boolean",
        params(&[("max-k", json!(max_k))]),
        Layout::Grid,
        table,
    );
    doc.failures = failures;
    Ok(doc)
}

/// Sizes exercised by `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Profile {
    Quick,
    Full,
}

struct Limits {
    diagram_size: u32,
    observable_order: usize,
    table_size: u32,
    dimension_size: u32,
    pi_size: u32,
    k: u32,
    route_pi_size: u32,
    strand_k: u32,
    bubble_k: u32,
    order_pi_size: u32,
}

impl Profile {
    fn limits(self) -> Limits {
        match self {
            Profile::Quick => Limits {
                diagram_size: 6,
                observable_order: 8,
                table_size: 5,
                dimension_size: 6,
                pi_size: 4,
                k: 4,
                route_pi_size: 4,
                strand_k: 2,
                bubble_k: 8,
                order_pi_size: 3,
            },
            Profile::Full => Limits {
                diagram_size: 10,
                observable_order: 12,
                table_size: 7,
                dimension_size: 8,
                pi_size: 6,
                k: 8,
                route_pi_size: 5,
                strand_k: 6,
                bubble_k: 12,
                order_pi_size: 4,
            },
        }
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(
        &mut self,
        group: &str,
        subject: impl Into<String>,
        property: &str,
        witness: Option<String>,
    ) {
        self.0.push(Check {
            group: group.to_string(),
            subject: subject.into(),
            property: property.to_string(),
            passed: witness.is_none(),
            witness,
        });
    }
}

const OBSERVABLES_GROUP: &str = "observables";
const CHARACTERS_GROUP: &str = "characters";
const ROUTES_GROUP: &str = "route-agreement";
const REWRITING_GROUP: &str = "rewriting";

fn observable_checks(out: &mut Checks, lambda: &Partition, k_max: usize) {
    let g = OBSERVABLES_GROUP;
    let s = lambda.to_string();
    let prof = profile_coordinates(lambda);
    out.push(
        g,
        s.clone(),
        "interlacing",
        (!prof.is_valid()).then(|| format!("{prof:?}")),
    );
    let sx: i64 = prof.minima.iter().sum();
    let sy: i64 = prof.maxima.iter().sum();
    out.push(
        g,
        s.clone(),
        "sum of minima equals sum of maxima",
        (sx != sy).then(|| format!("{sx} vs {sy}")),
    );
    let tm = transition_measure(lambda);
    let bad = tm.atoms.iter().find(|(_, w)| !w.is_positive());
    out.push(
        g,
        s.clone(),
        "transition weights positive",
        bad.map(|(x, w)| format!("weight {w} at {x}")),
    );
    let mass = tm.total_mass();
    out.push(
        g,
        s.clone(),
        "transition weights sum to 1",
        (mass != Rational::from_integer(1.into())).then(|| mass.to_string()),
    );
    let m = observable(lambda, ObservableKind::Moment, k_max);
    let b = observable(lambda, ObservableKind::Boolean, k_max);
    let first = (!m.get(1).is_zero() || !b.get(1).is_zero())
        .then(|| format!("M1 = {}, B1 = {}", m.get(1), b.get(1)));
    out.push(g, s.clone(), "M1 = B1 = 0", first);
    let non_int = (1..=k_max).find(|&k| !m.get(k).is_integer() || !b.get(k).is_integer());
    out.push(
        g,
        s.clone(),
        &format!("M_k, B_k integral for k <= {k_max}"),
        non_int.map(|k| format!("k = {k}")),
    );
    let b2 = b.get(2).clone();
    out.push(
        g,
        s.clone(),
        "B2 = |λ|",
        (b2 != Rational::from_integer(lambda.size().into())).then(|| b2.to_string()),
    );
    let mt = observable(&lambda.transpose(), ObservableKind::Moment, k_max);
    let bt = observable(&lambda.transpose(), ObservableKind::Boolean, k_max);
    let flip = (1..=k_max).find(|&k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let s = Rational::from_integer(sign.into());
        *mt.get(k) != m.get(k) * &s || *bt.get(k) != b.get(k) * &s
    });
    out.push(
        g,
        s.clone(),
        "transpose flips odd orders",
        flip.map(|k| format!("k = {k}")),
    );
    out.push(
        g,
        s,
        &format!("moment-cumulant relations to order {k_max}"),
        (!moment_cumulant_check(lambda, k_max)).then(|| "mismatch".to_string()),
    );
}

fn character_checks(out: &mut Checks, table_size: u32, dimension_size: u32) -> Result<()> {
    let g = CHARACTERS_GROUP;
    for n in 1..=table_size {
        let parts = enumerate_partitions(n);
        let classes: Vec<(Partition, BigInt)> = parts
            .iter()
            .map(|p| (p.clone(), conjugacy_class_size(&CycleType::new(p.clone()))))
            .collect();
        let mut rows = Vec::new();
        for lambda in &parts {
            let row: Vec<BigInt> = classes
                .iter()
                .map(|(c, _)| mn_character_unnormalized(lambda, c))
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        let order: BigInt = (1..=n).map(BigInt::from).product();
        let mut witness = None;
        'outer: for (i, a) in rows.iter().enumerate() {
            for (j, b) in rows.iter().enumerate() {
                let ip: BigInt = classes
                    .iter()
                    .zip(a.iter().zip(b))
                    .map(|((_, size), (x, y))| size * x * y)
                    .sum();
                let expected = if i == j {
                    order.clone()
                } else {
                    BigInt::zero()
                };
                if ip != expected {
                    witness = Some(format!("<χ^{}, χ^{}> = {ip}", parts[i], parts[j]));
                    break 'outer;
                }
            }
        }
        out.push(g, format!("n={n}"), "row orthogonality", witness);
    }
    for n in 1..=dimension_size {
        let bad = enumerate_partitions(n)
            .into_iter()
            .find(|l| dimension(l) != l.hook_length_dimension());
        out.push(
            g,
            format!("n={n}"),
            "dimension equals hook-length formula",
            bad.map(|l| l.to_string()),
        );
    }
    Ok(())
}

fn route_checks(
    out: &mut Checks,
    limits: &Limits,
    mutation: Option<Mutation>,
    kerov: &BTreeMap<Partition, GradedPolynomial>,
    boolean: &BTreeMap<u32, BTreeMap<Partition, BigInt>>,
) {
    let g = ROUTES_GROUP;
    let mut r = reducer(mutation);
    for pi in partitions_up_to(limits.route_pi_size)
        .into_iter()
        .filter(|p| !p.is_empty())
    {
        let dots = vec![0; pi.size() as usize];
        let witness = match (r.reduce_alpha(&pi, &dots), kerov.get(&pi)) {
            (Ok(d), Some(s)) if y_to_x(&d) == *s => None,
            (Ok(d), Some(s)) => Some(format!("diagrammatic {}, solver {s}", y_to_x(&d))),
            (Ok(_), None) => Some("solver route unavailable".to_string()),
            (Err(e), _) => Some(e.to_string()),
        };
        out.push(g, pi.to_string(), "closed diagram matches P_π", witness);
    }
    let strands = expand_dotted_strands(limits.strand_k, CollisionRule::WithOverlaps);
    for (k, e) in strands.iter().enumerate() {
        let k = k as u32;
        let subject = format!("k={k}");
        out.push(
            g,
            subject.clone(),
            "strand support and parity",
            check_expansion(k, e).err().map(|e| e.to_string()),
        );
        let agg = aggregate_by_cycle_type(e);
        let witness = match boolean.get(&(k + 2)) {
            Some(m) if *m == agg => None,
            Some(m) => Some(format!("strand {agg:?}, solver {m:?}")),
            None => Some("solver route unavailable".to_string()),
        };
        out.push(g, subject, "strand aggregate matches m^(k+2)", witness);
    }
}

fn rewriting_checks(out: &mut Checks, limits: &Limits, mutation: Option<Mutation>) {
    let g = REWRITING_GROUP;
    for k in 0..=limits.bubble_k {
        let mv = bubble_move_full(k);
        let bad_m =
            mv.m.iter()
                .find(|(&(i, j), v)| v.is_negative() || i + j > k);
        let bad_n = mv.n.iter().find(|(&l, v)| v.is_negative() || l > k);
        let witness = bad_m
            .map(|(ij, v)| format!("m{ij:?} = {v}"))
            .or_else(|| bad_n.map(|(l, v)| format!("n{l} = {v}")));
        out.push(
            g,
            format!("k={k}"),
            "bubble move coefficients non-negative",
            witness,
        );
    }
    let inc = if mutation == Some(Mutation::NoCurlDot) {
        0
    } else {
        1
    };
    let mut inner =
        AlphaReducer::with_order(ExtractionOrder::InnermostFirst).with_curl_dot_increment(inc);
    let mut outer =
        AlphaReducer::with_order(ExtractionOrder::OutermostFirst).with_curl_dot_increment(inc);
    for pi in partitions_up_to(limits.order_pi_size)
        .into_iter()
        .filter(|p| !p.is_empty())
    {
        let n = pi.size() as usize;
        for dots in dot_vectors(n, 2) {
            let subject = format!("{pi} dots {dots:?}");
            let a = inner.alpha(&pi, &dots);
            let b = outer.alpha(&pi, &dots);
            let witness = match (a, b) {
                (Ok(a), Ok(b)) if a == b => None,
                (Ok(a), Ok(b)) => Some(format!("{a} vs {b}")),
                (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
            };
            out.push(g, subject.clone(), "extraction order independence", witness);
            let witness = inner.reduce_alpha(&pi, &dots).err().map(|e| e.to_string());
            out.push(
                g,
                subject,
                "dotted reduction positive within degree bound",
                witness,
            );
        }
    }
}

fn dot_vectors(len: usize, max_total: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    (0..=max_total)
        .flat_map(|first| {
            dot_vectors(len - 1, max_total - first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

pub fn verify(profile: Profile, mutation: Option<Mutation>) -> Result<Document> {
    let limits = profile.limits();
    let mut checks = Checks(Vec::new());
    for lambda in partitions_up_to(limits.diagram_size) {
        observable_checks(&mut checks, &lambda, limits.observable_order);
    }
    character_checks(&mut checks, limits.table_size, limits.dimension_size)?;
    let report = verify_theorems(limits.pi_size, limits.k, &options(mutation), true);
    route_checks(
        &mut checks,
        &limits,
        mutation,
        &report.table.kerov,
        &report.table.boolean,
    );
    checks.0.extend(report.checks);
    rewriting_checks(&mut checks, &limits, mutation);

    let mut table = Table::new(&["group", "subject", "property", "passed", "witness"]);
    let mut summary: Vec<(String, usize, usize)> = Vec::new();
    let mut failures = Vec::new();
    for c in &checks.0 {
        let pos = match summary.iter().position(|(g, _, _)| *g == c.group) {
            Some(p) => p,
            None => {
                summary.push((c.group.clone(), 0, 0));
                summary.len() - 1
            }
        };
        summary[pos].2 += 1;
        if c.passed {
            summary[pos].1 += 1;
        } else {
            failures.push(format!(
                "{} {} {}: {}",
                c.group,
                c.subject,
                c.property,
                c.witness.as_deref().unwrap_or("")
            ));
        }
        table.push(vec![
            Cell::text(&c.group),
            Cell::text(&c.subject),
            Cell::text(&c.property),
            Cell::flag(c.passed),
            match &c.witness {
                Some(w) => Cell::text(w),
                None => Cell {
                    text: String::new(),
                    latex: None,
                    json: Value::Null,
                },
            },
        ]);
    }
    let mut sum_table = Table::new(&["group", "passed", "total"]);
    for (g, p, t) in summary {
        sum_table.push(vec![
            Cell::text(g),
            Cell::int(p as u64),
            Cell::int(t as u64),
        ]);
    }
    let name = clap::ValueEnum::to_possible_value(&profile)
        .expect("not skipped")
        .get_name()
        .to_string();
    let mut doc = Document::new(
        "verify",
        params(&[("profile", json!(name))]),
        Layout::Grid,
        table,
    );
    doc.summary = Some(sum_table);
    doc.failures = failures;
    Ok(doc)
}
