use std::fs;
use std::path::Path;
use std::time::Instant;

use kdecomp_core::classify::{classify, colon_is_primary_check, is_primary};
use kdecomp_core::decompose::{associated_primes, primary_decomposition};
use kdecomp_core::enumerate::{enumerate, EnumerateOptions};
use kdecomp_core::ideal::{all_ideals, all_k_ideals, generated_ideal};
use kdecomp_core::natpoly::{
    golan_witness, nat_principal_k_check, nat_sum_not_k_witness, non_yoked_pair, yoked_report,
};
use kdecomp_core::par::{self, Strategy};
use kdecomp_core::verify::{self, checks, render_text, verify_semiring, Finding, Severity, Totals};
use kdecomp_core::{srs, ElemSet, Error, FiniteSemiring, Ideal, KIdeal};
use serde_json::json;

use crate::report::{findings_text, Header, InputDigest, Report, Sink};
use crate::{Cli, Command, Demo};

/// Semirings verified per parallel batch in `verify-all`.
const CHUNK: usize = 256;

/// An input or usage problem: exit code 2.
struct InputError(String);

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> Self {
        InputError(e.to_string())
    }
}

type Res<T> = Result<T, InputError>;

pub fn run(cli: &Cli, command: String) -> i32 {
    match dispatch(cli, command) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("kdecomp: error: {msg}");
            2
        }
    }
}

fn finding(semiring: &str, check: &'static str, witness: String) -> Finding {
    Finding {
        severity: Severity::Violation,
        semiring: semiring.to_string(),
        check,
        witness,
    }
}

fn load(path: &Path) -> Res<(FiniteSemiring, InputDigest)> {
    let bytes = fs::read(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| InputError(format!("{}: not valid UTF-8", path.display())))?;
    let s = srs::parse(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok((s, InputDigest::of(path.display().to_string(), &bytes)))
}

fn parse_set(s: &FiniteSemiring, text: &str) -> Res<ElemSet> {
    s.parse_set(text).map_err(|e| InputError(format!("--set {text}: {e}")))
}

fn ideal_arg<'s>(s: &'s FiniteSemiring, text: &str) -> Res<Ideal<'s>> {
    let set = parse_set(s, text)?;
    Ideal::new(s, set).map_err(|e| InputError(format!("--set {text}: {e}")))
}

fn proper_k_arg<'s>(s: &'s FiniteSemiring, text: &str) -> Res<KIdeal<'s>> {
    let k = ideal_arg(s, text)?
        .to_k_ideal()
        .map_err(|e| InputError(format!("--set {text}: {e}")))?;
    if !k.is_proper() {
        return Err(InputError(format!("--set {text}: {}", Error::NotProper(k.members()))));
    }
    Ok(k)
}

fn strategy(cli: &Cli) -> Res<Strategy> {
    match cli.jobs {
        Some(0) => Err(InputError("--jobs: must be at least 1".into())),
        Some(1) => Ok(Strategy::Sequential),
        Some(n) => {
            let _ = par::configure_threads(n);
            Ok(Strategy::Parallel)
        }
        None => Ok(Strategy::Parallel),
    }
}

fn dispatch(cli: &Cli, command: String) -> Res<i32> {
    let mut inputs = Vec::new();
    let report = match &cli.command {
        Command::Check { file } => {
            let (s, d) = load(file)?;
            inputs.push(d);
            check(&s)
        }
        Command::Ideals { file, k_only } => {
            let (s, d) = load(file)?;
            inputs.push(d);
            ideals(&s, *k_only)
        }
        Command::Closure { file, set } => {
            let (s, d) = load(file)?;
            inputs.push(d);
            let set = parse_set(&s, set)?;
            closure(&s, set)
        }
        Command::Classify { file, set } => {
            let (s, d) = load(file)?;
            inputs.push(d);
            let i = ideal_arg(&s, set)?;
            classify_cmd(&i)
        }
        Command::Decompose { file, set } => {
            let (s, d) = load(file)?;
            inputs.push(d);
            let k = proper_k_arg(&s, set)?;
            decompose(&k)
        }
        Command::Primes { file, set } => {
            let (s, d) = load(file)?;
            inputs.push(d);
            let k = proper_k_arg(&s, set)?;
            primes(&k)
        }
        Command::Verify { file } => {
            let (s, d) = load(file)?;
            inputs.push(d);
            let r = verify_semiring(&s);
            Report {
                text: render_text(&r),
                result: serde_json::to_value(&r).expect("serializable"),
                findings: r.findings,
            }
        }
        Command::VerifyAll {
            order,
            iso,
            allow_large,
        } => return verify_all(cli, command, *order, *iso, *allow_large),
        Command::Enumerate {
            order,
            iso,
            allow_large,
        } => return enumerate_cmd(cli, command, *order, *iso, *allow_large),
        Command::Natpoly {
            demo,
            check_principal,
            a,
            b,
        } => natpoly(*demo, check_principal.as_deref(), *a, *b)?,
    };
    let header = Header { command, inputs };
    let mut sink = Sink::new(cli.out.as_deref())?;
    sink.write(&report.render(&header, cli.json))?;
    sink.finish()?;
    Ok(report.exit_code())
}

fn check(s: &FiniteSemiring) -> Report {
    let f = s.flags();
    let text = format!(
        "semiring {} order {}\nflags {} additively_cancellative={} yoked={} zerosumfree={} ring={}\nvalid true\n",
        s.name(),
        s.order(),
        f.bit_string(),
        f.additively_cancellative,
        f.yoked,
        f.zerosumfree,
        f.is_ring
    );
    Report {
        text,
        result: json!({
            "name": s.name(),
            "order": s.order(),
            "flags": f,
            "flag_bits": f.bit_string(),
            "add": s.add_rows(),
            "mul": s.mul_rows(),
        }),
        findings: Vec::new(),
    }
}

fn ideals(s: &FiniteSemiring, k_only: bool) -> Report {
    let sets: Vec<ElemSet> = if k_only {
        all_k_ideals(s).iter().map(|k| k.members()).collect()
    } else {
        all_ideals(s).iter().map(|i| i.members()).collect()
    };
    let text: String = sets.iter().map(|x| format!("{x}\n")).collect();
    Report {
        text,
        result: json!({ "k_only": k_only, "ideals": sets }),
        findings: Vec::new(),
    }
}

fn closure(s: &FiniteSemiring, set: ElemSet) -> Report {
    let generated = generated_ideal(s, set);
    let mut text = format!("set {set}\ngenerated {generated}\n");
    let mut findings = Vec::new();
    let closure = match generated.k_closure() {
        Ok(c) => {
            text += &format!("k_closure {c}\n");
            Some(c.members())
        }
        Err(e) => {
            findings.push(finding(s.name(), checks::K_CLOSURE_LAWS, e.to_string()));
            None
        }
    };
    Report {
        text,
        result: json!({
            "set": set,
            "generated": generated.members(),
            "k_closure": closure,
            "is_k_ideal": generated.is_k_ideal(),
        }),
        findings,
    }
}

fn classify_cmd(i: &Ideal<'_>) -> Report {
    let s = i.ring();
    let mut findings = Vec::new();
    let mut text = format!("ideal {i}\n");
    let class = match classify(i) {
        Ok(c) => {
            text += &format!("{c}\n");
            Some(c)
        }
        Err(e) => {
            findings.push(finding(s.name(), checks::PRIMARY_RADICAL_PRIME, e.to_string()));
            None
        }
    };
    let primary = is_primary(i);
    let mut colons = Vec::new();
    for x in s.elems() {
        let c = i.colon(x);
        let r = c.radical();
        let c_primary = is_primary(&c);
        text += &format!("colon {x} {c} radical {r} primary {c_primary}\n");
        if primary && !i.contains(x) {
            let rep = colon_is_primary_check(i, x);
            if !rep.passed {
                findings.push(finding(
                    s.name(),
                    checks::COLON_IS_PRIMARY,
                    format!(
                        "({i} : {x}) = {} radical {} expected {}, witness {:?}",
                        rep.colon, rep.radical, rep.expected_radical, rep.primary_witness
                    ),
                ));
            }
        }
        colons.push(json!({ "x": x, "colon": c.members(), "radical": r.members(), "primary": c_primary }));
    }
    Report {
        text,
        result: json!({
            "ideal": i.members(),
            "is_k_ideal": i.is_k_ideal(),
            "class": class,
            "colons": colons,
        }),
        findings,
    }
}

fn decompose(k: &KIdeal<'_>) -> Report {
    let s = k.ring();
    let mut findings = Vec::new();
    let assoc = associated_primes(k).expect("proper k-ideal");
    let mut text = String::new();
    let decomposition = match primary_decomposition(k) {
        Ok(d) => {
            text += &format!("{d}\n");
            let engine: std::collections::BTreeSet<ElemSet> = d.radicals.iter().map(|r| r.members()).collect();
            if engine != assoc.primes() {
                findings.push(finding(
                    s.name(),
                    checks::PRIME_SET_UNIQUE,
                    format!(
                        "{k}: component radicals {} but associated primes {}",
                        kdecomp_core::decompose::fmt_sets(&engine),
                        kdecomp_core::decompose::fmt_sets(&assoc.primes())
                    ),
                ));
            }
            json!({
                "components": d.components.iter().zip(&d.radicals)
                    .map(|(q, p)| json!({ "component": q.members(), "radical": p.members() }))
                    .collect::<Vec<_>>(),
                "reduced": d.reduced,
                "irreducible": d.irreducible.iter().map(|q| q.members()).collect::<Vec<_>>(),
                "provenance": d.provenance,
            })
        }
        Err(e) => {
            text += &format!("ideal {k}\nno decomposition: {e}\n");
            findings.push(finding(s.name(), checks::DECOMPOSITION_EXISTS, format!("{k}: {e}")));
            serde_json::Value::Null
        }
    };
    for (p, x) in &assoc.witnesses {
        text += &format!("associated {p} witness {x}\n");
    }
    Report {
        text,
        result: json!({
            "ideal": k.members(),
            "decomposition": decomposition,
            "associated": assoc,
        }),
        findings,
    }
}

fn primes(k: &KIdeal<'_>) -> Report {
    let assoc = associated_primes(k).expect("proper k-ideal");
    let mut text = format!("ideal {k}\n");
    for (p, x) in &assoc.witnesses {
        text += &format!("prime {p} witness {x}\n");
    }
    Report {
        text,
        result: json!({ "ideal": k.members(), "associated": assoc }),
        findings: Vec::new(),
    }
}

fn census_options(iso: bool, allow_large: bool, strategy: Strategy) -> EnumerateOptions {
    EnumerateOptions {
        up_to_iso: iso,
        allow_large,
        strategy,
    }
}

fn enumerate_err(e: Error) -> InputError {
    match e {
        Error::OrderTooLarge { .. } => InputError(format!("--order: {e}; pass --allow-large to override")),
        e => InputError(format!("--order: {e}")),
    }
}

fn verify_all(cli: &Cli, command: String, order: usize, iso: bool, allow_large: bool) -> Res<i32> {
    let strategy = strategy(cli)?;
    if order < 2 {
        return Err(enumerate_err(Error::InvalidOrder(order)));
    }
    let start = Instant::now();
    let mut census = Vec::new();
    for n in 2..=order {
        census.extend(enumerate(n, census_options(iso, allow_large, strategy)).map_err(enumerate_err)?);
    }
    let mut digest_input = String::new();
    for s in &census {
        digest_input += &srs::write(s);
    }
    let header = Header {
        command,
        inputs: vec![InputDigest::of(
            format!("census order<={order}{}", if iso { " iso" } else { "" }),
            digest_input.as_bytes(),
        )],
    };

    let mut sink = Sink::new(cli.out.as_deref())?;
    let mut totals = Totals::default();
    let mut findings: Vec<Finding> = Vec::new();
    if cli.json {
        let h = serde_json::to_string(&header).expect("serializable");
        // header object minus its closing brace, then the streamed array
        sink.write(&format!("{},\"result\":{{\"semirings\":[\n", &h[..h.len() - 1]))?;
    } else {
        sink.write(&header.text())?;
    }
    let mut first = true;
    for chunk in census.chunks(CHUNK) {
        let reports = verify::verify_all(chunk, strategy);
        let mut buf = String::new();
        for r in &reports {
            totals.add(r);
            findings.extend(r.findings.iter().cloned());
            if cli.json {
                if !first {
                    buf += ",\n";
                }
                buf += &serde_json::to_string(r).expect("serializable");
            } else {
                buf += &render_text(r);
            }
            first = false;
        }
        sink.write(&buf)?;
    }
    let code = if findings.is_empty() { 0 } else { 1 };
    if cli.json {
        sink.write(&format!(
            "\n],\"totals\":{}}},\"findings\":{},\"exit_code\":{code}}}\n",
            serde_json::to_string(&totals).expect("serializable"),
            serde_json::to_string(&findings).expect("serializable")
        ))?;
    } else {
        sink.write(&totals.render_text())?;
        sink.write(&findings_text(&findings))?;
    }
    sink.finish()?;
    eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
    Ok(code)
}

fn enumerate_cmd(cli: &Cli, command: String, order: usize, iso: bool, allow_large: bool) -> Res<i32> {
    let strategy = strategy(cli)?;
    let start = Instant::now();
    let census = enumerate(order, census_options(iso, allow_large, strategy)).map_err(enumerate_err)?;
    let rows: Vec<(String, String, usize)> = par::map(strategy, &census, |s| {
        (s.name().to_string(), s.flags().bit_string(), all_k_ideals(s).len())
    });
    let mut tsv = String::from("name\tflags\tk_ideals\n");
    for (name, flags, k) in &rows {
        tsv += &format!("{name}\t{flags}\t{k}\n");
    }
    if let Some(dir) = &cli.out {
        fs::create_dir_all(dir).map_err(|e| InputError(format!("--out {}: {e}", dir.display())))?;
        for s in &census {
            fs::write(dir.join(format!("{}.srs", s.name())), srs::write(s))?;
        }
        fs::write(dir.join("census.tsv"), &tsv)?;
    }
    let header = Header {
        command,
        inputs: Vec::new(),
    };
    let report = Report {
        text: format!("order {order} iso {iso} count {}\n{tsv}", census.len()),
        result: json!({
            "order": order,
            "iso": iso,
            "count": census.len(),
            "semirings": census.iter().zip(&rows).map(|(s, (_, flags, k))| json!({
                "name": s.name(),
                "flags": flags,
                "k_ideals": k,
                "add": s.add_rows(),
                "mul": s.mul_rows(),
            })).collect::<Vec<_>>(),
        }),
        findings: Vec::new(),
    };
    // with enumerate, --out names a directory, so the report goes to stdout only
    let mut sink = Sink::new(None)?;
    sink.write(&report.render(&header, cli.json))?;
    sink.finish()?;
    eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
    Ok(0)
}

fn natpoly(demo: Option<Demo>, principal: Option<&[u64]>, a: u64, b: u64) -> Res<Report> {
    let natpoly_err = |e: Error| InputError(e.to_string());
    if let Some(&[a, bound]) = principal {
        let r = nat_principal_k_check(a, bound).map_err(|e| InputError(format!("--check-lemma210: {e}")))?;
        let findings = match r.counterexample {
            Some((x, y)) => vec![finding(
                "N",
                "principal-k-ideal",
                format!("{a} | {x} and {a} | {x}+{y} but {a} does not divide {y}"),
            )],
            None => Vec::new(),
        };
        return Ok(Report {
            text: r.render(),
            result: serde_json::to_value(&r).expect("serializable"),
            findings,
        });
    }
    let failed = |name: &'static str, e: Error| finding("N[x]", name, e.to_string());
    Ok(match demo.expect("clap requires a task") {
        Demo::Golan => {
            let c = golan_witness();
            let claims = c.claims().map_err(natpoly_err)?;
            let findings = c.validate().err().map(|e| failed("golan-certificate", e)).into_iter().collect();
            Report {
                text: c.render().map_err(natpoly_err)?,
                result: json!({ "certificate": c, "claims": claims }),
                findings,
            }
        }
        Demo::Yoked => {
            let (f, g) = non_yoked_pair();
            let r = yoked_report(&f, &g);
            let findings = match &r.h {
                Some(h) => vec![finding("N[x]", "non-yoked-pair", format!("{f} and {g} are yoked via h = {h}"))],
                None => Vec::new(),
            };
            Report {
                text: r.render(),
                result: serde_json::to_value(&r).expect("serializable"),
                findings,
            }
        }
        Demo::Sums => {
            let c = nat_sum_not_k_witness(a, b).map_err(|e| InputError(format!("--a/--b: {e}")))?;
            let findings = c.validate().err().map(|e| failed("sum-not-k", e)).into_iter().collect();
            Report {
                text: c.render(),
                result: json!({ "certificate": c, "claims": c.claims() }),
                findings,
            }
        }
    })
}
