use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::json;

use ehzd::algebra::arith::factorial;
use ehzd::blocks::{blocks_an, blocks_sn, quotient_congruence, relative_hook_degree, BlockRecord};
use ehzd::partitions::enumerate_partitions;
use ehzd::unipotent::{
    conclusion_violations, degree_collisions, hll_check_gl, speceq_search, tori_check, unipotent_degrees_gl,
    witness_counts, witness_pairs, Series, SpeceqBounds, SpeceqPart, ToriEntry,
};
use ehzd::wreath::{enumerate_multipartitions, schur_specialize_roots, symbol_of, wreath_degree};
use ehzd::{zsigmondy, BigRat, Error};

use crate::args::Span;
use crate::report::Report;

/// Why a command could not produce a report. Both end with status 2.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(msg) => Failure::Usage(msg),
            other => Failure::Compute(other),
        }
    }
}

pub type Outcome = Result<Report, Failure>;

fn usize_span(s: Span) -> Vec<usize> {
    s.iter().map(|k| k as usize).collect()
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GroupArg {
    Sym,
    Alt,
}

pub fn scan_blocks(group: GroupArg, n: Span, p: usize, ehzd_only: bool) -> Outcome {
    let header = vec!["n", "core", "w", "defect", "chars", "height-0 degrees", "ehzd", "case", "witness"];
    let mut report = Report::new("scan-blocks", header);
    let per_n: Vec<(Vec<BlockRecord>, Vec<serde_json::Value>)> = usize_span(n)
        .par_iter()
        .map(|&n| -> Result<_, Error> {
            let mut records = Vec::new();
            let mut refutations = Vec::new();
            match group {
                GroupArg::Sym => {
                    for b in blocks_sn(n, p)? {
                        match BlockRecord::from_sym(&b) {
                            Ok(r) => {
                                if r.ehzd && r.weight > 0 && !matches!(r.classification.as_str(), "b" | "c") {
                                    refutations.push(json!({"kind": "ehzd-outside-trichotomy", "block": r}));
                                }
                                records.push(r);
                            }
                            Err(Error::ClassificationFailure(msg)) => refutations.push(json!({
                                "kind": "classification-failure", "n": n, "p": p, "core": b.label.core, "error": msg,
                            })),
                            Err(e) => return Err(e),
                        }
                    }
                }
                GroupArg::Alt => match blocks_an(n, p) {
                    Ok(blocks) => {
                        for b in &blocks {
                            let r = BlockRecord::from_alt(b);
                            let shape = r.classification == "b" || r.classification == "unclassified";
                            if r.ehzd && r.defect > 0 && !shape {
                                refutations.push(json!({"kind": "ehzd-outside-case-b", "block": r}));
                            }
                            records.push(r);
                        }
                    }
                    Err(Error::ClassificationFailure(msg)) => {
                        refutations.push(json!({"kind": "classification-failure", "n": n, "p": p, "error": msg}))
                    }
                    Err(e) => return Err(e),
                },
            }
            Ok((records, refutations))
        })
        .collect::<Result<_, _>>()?;
    let mut by_case: BTreeMap<String, usize> = BTreeMap::new();
    let (mut blocks, mut ehzd) = (0usize, 0usize);
    for (records, refutations) in per_n {
        for r in records {
            blocks += 1;
            *by_case.entry(r.classification.clone()).or_default() += 1;
            if r.ehzd {
                ehzd += 1;
            } else if ehzd_only {
                continue;
            }
            let witness = match &r.witness {
                Some((a, b)) => format!("{} ({}) < {} ({})", a.label, a.degree, b.label, b.degree),
                None => String::new(),
            };
            report.row(vec![
                r.n.to_string(),
                r.core.to_string(),
                r.weight.to_string(),
                r.defect.to_string(),
                r.members.len().to_string(),
                r.height_zero_degrees.join(","),
                r.ehzd.to_string(),
                r.classification.clone(),
                witness,
            ]);
            report.record(&r);
        }
        for x in refutations {
            report.refute(&x);
        }
    }
    let group_name = match group {
        GroupArg::Sym => "sym",
        GroupArg::Alt => "alt",
    };
    report.note("group", group_name);
    report.note("n_range", n.to_string());
    report.note("p", p);
    report.note("blocks", blocks);
    report.note("ehzd_blocks", ehzd);
    report.note("blocks_by_case", &by_case);
    report.note("refutations", report.refutations.len());
    Ok(report)
}

pub fn verify_hook_formula(n_max: usize, primes: &[usize]) -> Outcome {
    let header = vec!["n", "p", "partitions", "equality failures", "+", "-", "both", "neither"];
    let mut report = Report::new("verify-hook-formula", header);
    let pairs: Vec<(usize, usize)> = (0..=n_max).flat_map(|n| primes.iter().map(move |&p| (n, p))).collect();
    let results: Vec<_> = pairs
        .par_iter()
        .map(|&(n, p)| -> Result<_, Error> {
            let mut tally = [0usize; 4];
            let mut eq_fail = 0usize;
            let mut refutations = Vec::new();
            let parts = enumerate_partitions(n);
            for l in &parts {
                let want = l.degree();
                match relative_hook_degree(l, p) {
                    Ok(d) if d == want => {}
                    other => {
                        eq_fail += 1;
                        let got = match other {
                            Ok(d) => d.to_string(),
                            Err(e) => e.to_string(),
                        };
                        refutations.push(json!({
                            "kind": "hook-formula", "partition": l, "p": p,
                            "expected": want.to_string(), "got": got,
                        }));
                    }
                }
                let c = quotient_congruence(l, p)?;
                let slot = match (c.holds_plus, c.holds_minus) {
                    (true, false) => 0,
                    (false, true) => 1,
                    (true, true) => 2,
                    (false, false) => 3,
                };
                tally[slot] += 1;
                if slot == 3 {
                    refutations.push(json!({"kind": "congruence", "report": c}));
                }
            }
            Ok(((n, p, parts.len(), eq_fail, tally), refutations))
        })
        .collect::<Result<_, _>>()?;
    let mut totals = [0usize; 4];
    let mut eq_total = 0usize;
    let mut checked = 0usize;
    for ((n, p, count, eq_fail, tally), refutations) in results {
        checked += count;
        eq_total += eq_fail;
        for (t, x) in totals.iter_mut().zip(tally) {
            *t += x;
        }
        report.record(&json!({
            "n": n, "p": p, "partitions": count, "equality_failures": eq_fail,
            "congruence": {"plus": tally[0], "minus": tally[1], "both": tally[2], "neither": tally[3]},
        }));
        let mut row = vec![n.to_string(), p.to_string(), count.to_string(), eq_fail.to_string()];
        row.extend(tally.iter().map(ToString::to_string));
        report.row(row);
        for x in refutations {
            report.refute(&x);
        }
    }
    report.note("primes", primes);
    report.note("n_max", n_max);
    report.note("checked", checked);
    report.note("equality", format!("{eq_total} failures"));
    report.note("congruence", format!("{} exceptions", totals[3]));
    report.note("signs", json!({"plus": totals[0], "minus": totals[1], "both": totals[2]}));
    Ok(report)
}

pub fn verify_wreath(e_max: usize, r_max: usize) -> Outcome {
    if e_max == 0 {
        return Err(Failure::Usage("--e-max must be at least 1".into()));
    }
    let header = vec!["e", "r", "characters", "mismatches", "negative signs", "sum of squares", "e^r r!"];
    let mut report = Report::new("verify-wreath", header);
    let pairs: Vec<(usize, usize)> = (1..=e_max).flat_map(|e| (0..=r_max).map(move |r| (e, r))).collect();
    let results: Vec<_> = pairs
        .par_iter()
        .map(|&(e, r)| -> Result<_, Error> {
            let order = BigUint::from(e as u32).pow(r as u32) * factorial(r);
            let scale = BigRat::from_integer(order.clone().into());
            let (mut mismatches, mut negative) = (0usize, 0usize);
            let mut sum = BigUint::from(0u32);
            let mut refutations = Vec::new();
            let all = enumerate_multipartitions(e, r);
            for nu in &all {
                let degree = wreath_degree(nu);
                sum += degree.pow(2);
                let value = schur_specialize_roots(&symbol_of(nu))?;
                negative += usize::from(value.is_negative());
                let got = value.abs() * &scale;
                if got != BigRat::from_integer(degree.clone().into()) {
                    mismatches += 1;
                    refutations.push(json!({
                        "kind": "specialization", "e": e, "r": r, "multipartition": nu,
                        "expected": degree.to_string(), "got": got.to_string(),
                    }));
                }
            }
            if sum != order {
                refutations.push(json!({
                    "kind": "sum-of-squares", "e": e, "r": r, "sum": sum.to_string(), "order": order.to_string(),
                }));
            }
            Ok(((e, r, all.len(), mismatches, negative, sum, order), refutations))
        })
        .collect::<Result<_, _>>()?;
    for ((e, r, count, mismatches, negative, sum, order), refutations) in results {
        report.record(&json!({
            "e": e, "r": r, "characters": count, "mismatches": mismatches, "negative_signs": negative,
            "sum_of_squares": sum.to_string(), "group_order": order.to_string(),
        }));
        report.row(vec![
            e.to_string(),
            r.to_string(),
            count.to_string(),
            mismatches.to_string(),
            negative.to_string(),
            sum.to_string(),
            order.to_string(),
        ]);
        for x in refutations {
            report.refute(&x);
        }
    }
    report.note("e_max", e_max);
    report.note("r_max", r_max);
    report.note("refutations", report.refutations.len());
    Ok(report)
}

pub fn unipotent(n: usize, q: Option<u64>, collisions: bool) -> Outcome {
    if collisions {
        let q = q.ok_or_else(|| Failure::Usage("--collisions needs --q".into()))?;
        if q < 2 {
            return Err(Failure::Usage("--q must be at least 2".into()));
        }
        let mut report = Report::new("unipotent", vec!["first", "second", "value"]);
        let x = BigRat::from_integer((q as i64).into());
        let degrees: BTreeMap<_, _> =
            unipotent_degrees_gl(n)?.into_iter().map(|e| (e.partition, e.poly)).collect();
        let pairs = degree_collisions(n, q)?;
        for (a, b) in &pairs {
            let value = degrees[a].eval(&x).to_string();
            report.row(vec![a.to_string(), b.to_string(), value.clone()]);
            report.record(&json!({"first": a, "second": b, "value": value}));
        }
        report.note("n", n);
        report.note("q", q);
        report.note("collisions", pairs.len());
        return Ok(report);
    }
    let mut header = vec!["partition", "Deg", "at q=1"];
    if q.is_some() {
        header.push("at q");
    }
    let mut report = Report::new("unipotent", header);
    for e in unipotent_degrees_gl(n)? {
        let at_one = e.poly.eval_int(1).to_string();
        let at_q = q.map(|q| e.poly.eval(&BigRat::from_integer((q as i64).into())).to_string());
        let mut row = vec![e.partition.to_string(), e.poly.to_string(), at_one.clone()];
        row.extend(at_q.clone());
        report.row(row);
        report.record(&json!({
            "partition": e.partition, "coefficients": e.poly, "at_one": at_one, "at_q": at_q,
        }));
    }
    report.note("n", n);
    if let Some(q) = q {
        report.note("q", q);
    }
    report.note("characters", report.records.len());
    Ok(report)
}

pub fn hll_check(n: Span, d: Span) -> Outcome {
    if d.lo == 0 {
        return Err(Failure::Usage("--d must be positive".into()));
    }
    let header = vec!["n", "d", "core", "w", "partition", "quotient", "phi(1)", "constant", "sign", "ok"];
    let mut report = Report::new("hll-check", header);
    let pairs: Vec<(usize, usize)> =
        usize_span(n).into_iter().flat_map(|n| usize_span(d).into_iter().map(move |d| (n, d))).collect();
    let results: Vec<_> = pairs.par_iter().map(|&(n, d)| hll_check_gl(n, d)).collect::<Result<_, _>>()?;
    let (mut members, mut failures, mut plus, mut minus) = (0usize, 0usize, 0usize, 0usize);
    let mut ratios: BTreeSet<String> = BTreeSet::new();
    for r in results {
        failures += r.failures;
        plus += r.plus;
        minus += r.minus;
        for s in &r.series {
            if let Some(x) = &s.observed_ratio {
                ratios.insert(x.to_string());
            }
            for m in &s.members {
                members += 1;
                report.row(vec![
                    r.n.to_string(),
                    r.d.to_string(),
                    s.core.to_string(),
                    s.weight.to_string(),
                    m.partition.to_string(),
                    m.quotient.to_string(),
                    m.phi_degree.to_string(),
                    m.constant.as_ref().map_or("-".into(), ToString::to_string),
                    match m.sign {
                        Some(ehzd::unipotent::Sign::Plus) => "+".into(),
                        Some(ehzd::unipotent::Sign::Minus) => "-".into(),
                        None => "".into(),
                    },
                    m.ok.to_string(),
                ]);
                let rec = json!({
                    "n": r.n, "d": r.d, "core": s.core, "weight": s.weight, "index": s.index,
                    "observed_ratio": s.observed_ratio.as_ref().map(ToString::to_string), "member": m,
                });
                if !m.ok {
                    report.refute(&json!({"kind": "hll", "record": rec}));
                }
                report.record(&rec);
            }
        }
    }
    report.note("n", n.to_string());
    report.note("d", d.to_string());
    report.note("members", members);
    report.note("failures", failures);
    report.note("signs", json!({"plus": plus, "minus": minus}));
    report.note("observed_ratios", ratios);
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PartArg {
    A,
    B,
    Both,
}

pub fn speceq(bounds: SpeceqBounds, part: PartArg) -> Outcome {
    let parts = match part {
        PartArg::A => vec![SpeceqPart::A],
        PartArg::B => vec![SpeceqPart::B],
        PartArg::Both => vec![SpeceqPart::A, SpeceqPart::B],
    };
    let mut report = Report::new("speceq", vec!["part", "m", "q", "witnesses", "outside conclusion", "example"]);
    let searched: Vec<_> = parts.par_iter().map(|&x| speceq_search(bounds, x).map(|w| (x, w))).collect::<Result<_, _>>()?;
    for (x, witnesses) in &searched {
        let name = match x {
            SpeceqPart::A => "a",
            SpeceqPart::B => "b",
        };
        let violations = conclusion_violations(witnesses);
        let bad: BTreeSet<(u32, u64)> = violations.iter().map(|w| (w.m, w.q)).collect();
        for ((m, q), count) in witness_counts(witnesses) {
            let example = witnesses.iter().find(|w| w.m == m && w.q == q).expect("counted");
            report.row(vec![
                name.into(),
                m.to_string(),
                q.to_string(),
                count.to_string(),
                violations.iter().filter(|w| w.m == m && w.q == q).count().to_string(),
                format!("a={} {}/{}", join(&example.exponents), example.n1, example.n2),
            ]);
        }
        for w in witnesses {
            report.record(w);
        }
        for w in &violations {
            report.refute(&json!({"kind": "outside-conclusion", "witness": w}));
        }
        let m2: Vec<u64> = witness_pairs(witnesses).into_iter().filter(|&(m, _)| m == 2).map(|(_, q)| q).collect();
        report.note(&format!("part_{name}_witnesses"), witnesses.len());
        report.note(&format!("part_{name}_m2_q"), m2);
        report.note(&format!("part_{name}_pairs_outside_conclusion"), bad.len());
    }
    report.note("bounds", bounds);
    Ok(report)
}

pub fn tori(series: Option<Series>, n: Span, q: Span) -> Outcome {
    if q.lo < 2 {
        return Err(Failure::Usage("--q must be at least 2".into()));
    }
    let chosen: Vec<Series> = series.map_or(Series::ALL.to_vec(), |s| vec![s]);
    let mut entries = Vec::new();
    for &s in &chosen {
        for k in usize_span(n) {
            match ToriEntry::new(s, k) {
                Ok(e) => entries.push(e),
                Err(e) if series.is_some() && n.lo == n.hi => return Err(e.into()),
                Err(_) => {}
            }
        }
    }
    if entries.is_empty() {
        return Err(Failure::Usage(format!("no table rows for n = {n}")));
    }
    let header = vec!["series", "n", "q", "|T1|", "m1", "l1", "l1 | T1", "|T2|", "m2", "l2", "l2 | T2"];
    let mut report = Report::new("tori", header);
    let jobs: Vec<(ToriEntry, u64)> = entries.iter().flat_map(|e| q.iter().map(move |q| (e.clone(), q))).collect();
    let results: Vec<_> = jobs.par_iter().map(|(e, q)| tori_check(e, *q)).collect::<Result<_, _>>()?;
    let mut exceptions = Vec::new();
    for r in results {
        let mut row = vec![r.series.to_string(), r.n.to_string(), r.q.to_string()];
        for t in &r.tori {
            row.push(t.order.to_string());
            row.push(t.m.to_string());
            row.push(t.prime.as_ref().map_or("-".into(), ToString::to_string));
            row.push(t.divides.map_or("-".into(), |b| b.to_string()));
            if t.prime.is_none() {
                exceptions.push(format!("{}{} i={} q={}", r.series, r.n, t.index, r.q));
            }
        }
        report.row(row);
        if r.is_refutation() {
            report.refute(&json!({"kind": "zsigmondy-divisibility", "report": r}));
        }
        report.record(&r);
    }
    report.note("rows", entries.len());
    report.note("q", q.to_string());
    report.note("exceptions", exceptions);
    report.note("refutations", report.refutations.len());
    Ok(report)
}

pub fn zsigmondy_table(q: Span, m: Span) -> Outcome {
    if q.lo < 2 || m.lo < 1 {
        return Err(Failure::Usage("need q >= 2 and m >= 1".into()));
    }
    let mut report = Report::new("zsigmondy", vec!["q", "m", "prime"]);
    let pairs: Vec<(u64, u32)> = q.iter().flat_map(|q| m.iter().map(move |m| (q, m as u32))).collect();
    let results: Vec<_> = pairs.par_iter().map(|&(q, m)| zsigmondy(q, m)).collect();
    let mut missing = Vec::new();
    for z in results {
        report.row(vec![z.q.to_string(), z.m.to_string(), z.prime.as_ref().map_or("-".into(), ToString::to_string)]);
        if z.prime.is_none() {
            missing.push(format!("q={} m={}", z.q, z.m));
        }
        report.record(&z);
    }
    report.note("without_primitive_prime", missing);
    Ok(report)
}
