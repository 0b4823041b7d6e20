//! Command-line front end. Exit status 0 means success or pass, 1 a failed
//! check, 2 bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde_json::{json, Value};

use crate::complex::{order_complex, SimplicialComplex, DEFAULT_SIMPLEX_CAP};
use crate::homology::{homology_with, HomologyMethod, HomologySummary};
use crate::hyperfield::{ArcSet, TPhiValue};
use crate::mccord::{basis_certificates, cw_type_report};
use crate::models::{build_perp_poset, build_tphi_power, enum_grassmannian, grassmannian_candidates, DISCRETIZATION_CAVEAT};
use crate::phased::{
    binomial, check_transversal, gp_verify_all, gp_verify_all_tuples, is_normalized, perp_enumerate, perp_membership,
    transversal, GPFunction, GPVerdict, PhasedVector,
};
use crate::poset::{
    discrete_type_classes, format_mirrored, geometric_discrete_check, mirror_check, parse_poset_file, FinitePoset,
    PosetFile,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

#[derive(Debug, Parser)]
#[command(name = "tphi", version, about = "Tropical phase hyperfield and finite poset topology checks")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest complex, model or search space to build.
    #[arg(long, default_value_t = DEFAULT_SIMPLEX_CAP as u64, global = true)]
    pub cap: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Power,
    Perp,
    Grassmannian,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate `a + b + …` (hyperaddition) or `a * b` (product); `-a` negates.
    Hfcalc {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        expr: Vec<String>,
    },
    /// List the perp set of the given vectors in TΦ_k, or test one vector.
    Perp {
        #[arg(long)]
        k: u64,
        /// Test membership of this vector instead of listing.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        vectors: Vec<String>,
    },
    /// Verify the strong Grassmann–Plücker relations for a function file.
    GpCheck {
        file: PathBuf,
        /// Sweep all orderings of the relation tuples.
        #[arg(long)]
        all_tuples: bool,
    },
    /// Enumerate strong GP functions up to scalars.
    GpEnum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: u64,
    },
    /// Build and check the transversal of distinct-entry r-tuples of [n].
    Transversal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Check a poset file, and its mirror when present.
    PosetCheck { file: PathBuf },
    /// Print the order complex of a poset file.
    OrderComplex { file: PathBuf },
    /// Homology of a complex file (or of the order complex of a poset file).
    Homology {
        file: PathBuf,
        #[arg(long)]
        reduced: bool,
        /// Read a poset file and use its order complex.
        #[arg(long)]
        poset: bool,
        /// Ranks over the rationals only.
        #[arg(long)]
        rational: bool,
    },
    /// Contractibility certificates for every basic open ↑x of a poset file.
    #[command(name = "mccord-verify")]
    McCordVerify { file: PathBuf },
    /// CW homotopy type report for a poset file.
    CwReport { file: PathBuf },
    /// Build a model and print it in the poset or GP format.
    ModelBuild {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        r: Option<usize>,
        /// A vector of the perp family; repeat for several.
        #[arg(long = "vector", allow_hyphen_values = true)]
        vectors: Vec<String>,
    },
}

struct Line {
    text: String,
    json: Value,
}

fn line(text: impl Into<String>, json: Value) -> Line {
    Line { text: text.into(), json }
}

/// A line of a file format; in JSON it becomes `{"line": …}`.
fn raw(text: impl Into<String>) -> Line {
    let text = text.into();
    let json = json!({ "line": text });
    Line { text, json }
}

#[derive(Default)]
struct Report {
    lines: Vec<Line>,
    failed: bool,
}

impl Report {
    fn push(&mut self, l: Line) {
        self.lines.push(l);
    }
}

type Outcome = Result<Report, String>;

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let _ = writeln!(err, "{}", msg.lines().next().unwrap_or("usage error"));
            return 2;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            for l in &report.lines {
                let _ = match cli.format {
                    Format::Text => writeln!(out, "{}", l.text),
                    Format::JsonLines => writeln!(out, "{}", l.json),
                };
            }
            i32::from(report.failed)
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Outcome {
    let cap = u128::from(cli.cap);
    match &cli.command {
        Command::Hfcalc { expr } => hfcalc(&expr.join(" ")),
        Command::Perp { k, x, vectors } => perp(*k, x.as_deref(), vectors),
        Command::GpCheck { file, all_tuples } => gp_check(file, *all_tuples),
        Command::GpEnum { n, r, k } => gp_enum(*n, *r, *k, cap),
        Command::Transversal { n, r } => transversal_cmd(*n, *r),
        Command::PosetCheck { file } => poset_check(file),
        Command::OrderComplex { file } => {
            let p = read_poset(file)?;
            let c = order_complex(p.poset(), cap).map_err(|e| e.to_string())?;
            Ok(complex_lines(&c))
        }
        Command::Homology { file, reduced, poset, rational } => {
            let c = if *poset {
                order_complex(read_poset(file)?.poset(), cap).map_err(|e| e.to_string())?
            } else {
                SimplicialComplex::parse(&read(file)?).map_err(|e| e.to_string())?
            };
            let method = if *rational { HomologyMethod::Rational } else { HomologyMethod::Integral };
            Ok(homology_lines(&homology_with(&c, *reduced, method)))
        }
        Command::McCordVerify { file } => {
            let p = read_poset(file)?;
            let report = basis_certificates(p.poset(), cap);
            let text = report.lines();
            let mut r = Report { failed: !report.passed(), ..Report::default() };
            r.push(line(text[0].clone(), json!({ "columns": ["element", "certificate", "simplices"] })));
            for (e, t) in report.entries.iter().zip(&text[1..]) {
                r.push(line(
                    t.clone(),
                    json!({ "element": e.element, "certificate": e.certificate.kind(), "simplices": e.simplices.to_string() }),
                ));
            }
            match &report.homology {
                Some(h) => r.lines.extend(homology_lines(h).lines),
                None => r.push(raw(text[text.len() - 2].clone())),
            }
            let verdict = if report.passed() { "pass" } else { "fail" };
            r.push(line(format!("verdict: {verdict}"), json!({ "verdict": verdict })));
            Ok(r)
        }
        Command::CwReport { file } => {
            let p = read_poset(file)?;
            let report = cw_type_report(p.poset(), cap);
            Ok(Report { lines: report.lines().into_iter().map(raw).collect(), failed: false })
        }
        Command::ModelBuild { family, n, k, r, vectors } => model_build(*family, *n, *k, *r, vectors, cap),
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_poset(path: &Path) -> Result<PosetFile, String> {
    parse_poset_file(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_factor(s: &str) -> Result<TPhiValue, String> {
    let s = s.trim();
    let (negate, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, s),
    };
    let v: TPhiValue = body.parse().map_err(|e: crate::hyperfield::HyperfieldError| e.to_string())?;
    Ok(if negate { v.neg() } else { v })
}

fn hfcalc(expr: &str) -> Outcome {
    if expr.trim().is_empty() {
        return Err("empty expression".into());
    }
    let mut terms = Vec::new();
    for term in expr.split('+') {
        let mut value = TPhiValue::one();
        for factor in term.split('*') {
            value = value.mul(&parse_factor(factor)?);
        }
        terms.push(value);
    }
    let result = if terms.len() == 1 {
        terms[0].to_string()
    } else {
        terms.iter().fold(None::<ArcSet>, |acc, t| Some(match acc {
            None => ArcSet::singleton(t),
            Some(a) => a.add_value(t),
        }))
        .expect("at least one term")
        .to_string()
    };
    let mut r = Report::default();
    r.push(line(result.clone(), json!({ "expr": expr, "result": result })));
    Ok(r)
}

fn parse_vectors(vs: &[String]) -> Result<Vec<PhasedVector>, String> {
    vs.iter().map(|v| v.parse::<PhasedVector>().map_err(|e| format!("`{v}`: {e}"))).collect()
}

fn caveat_line() -> Line {
    line(format!("# caveat: {DISCRETIZATION_CAVEAT}"), json!({ "caveat": DISCRETIZATION_CAVEAT }))
}

fn perp(k: u64, x: Option<&str>, vectors: &[String]) -> Outcome {
    let vs = parse_vectors(vectors)?;
    let mut r = Report::default();
    if let Some(x) = x {
        let x: PhasedVector = x.parse().map_err(|e| format!("`{x}`: {e}"))?;
        let member = perp_membership(&vs, &x).map_err(|e| e.to_string())?;
        r.failed = !member;
        r.push(line(if member { "member" } else { "not member" }, json!({ "vector": x.to_string(), "member": member })));
        return Ok(r);
    }
    let members = perp_enumerate(&vs, k).map_err(|e| e.to_string())?;
    r.push(caveat_line());
    for m in &members {
        r.push(line(m.to_string(), json!({ "vector": m.to_string() })));
    }
    r.push(line(format!("count: {}", members.len()), json!({ "count": members.len() })));
    Ok(r)
}

fn gp_check(file: &Path, all_tuples: bool) -> Outcome {
    let phi: GPFunction = read(file)?.parse().map_err(|e| format!("{}: {e}", file.display()))?;
    let verdict = if all_tuples { gp_verify_all_tuples(&phi) } else { gp_verify_all(&phi) };
    let mut r = Report::default();
    match verdict {
        GPVerdict::Pass => {
            r.push(line("pass", json!({ "verdict": "pass" })));
            let normalized = is_normalized(&phi);
            r.push(line(
                format!("normalized: {}", if normalized { "yes" } else { "no" }),
                json!({ "normalized": normalized }),
            ));
        }
        GPVerdict::Fail(f) => {
            r.failed = true;
            r.push(line(format!("fail: {f}"), json!({ "verdict": "fail", "reason": f.to_string() })));
        }
    }
    Ok(r)
}

fn gp_lines(phis: &[GPFunction], n: usize, r: usize) -> Vec<Line> {
    let tuples = (1..=n).combinations(r).map(|t| t.iter().join(" ")).join(" | ");
    let mut out = vec![line(format!("# tuples: {tuples}"), json!({ "tuples": tuples }))];
    for phi in phis {
        let values: Vec<String> = phi.values().iter().map(ToString::to_string).collect();
        out.push(line(values.join(" "), json!({ "values": values })));
    }
    out.push(line(format!("count: {}", phis.len()), json!({ "count": phis.len() })));
    out
}

fn gp_enum(n: usize, r: usize, k: u64, cap: u128) -> Outcome {
    let phis = enum_grassmannian(n, r, k, cap, true).map_err(|e| e.to_string())?;
    let mut rep = Report::default();
    rep.push(line(
        format!("# candidates: {}", grassmannian_candidates(n, r, k)),
        json!({ "candidates": grassmannian_candidates(n, r, k).to_string() }),
    ));
    rep.lines.extend(gp_lines(&phis, n, r));
    Ok(rep)
}

fn transversal_cmd(n: usize, r: usize) -> Outcome {
    let t = transversal(n, r).map_err(|e| e.to_string())?;
    let mut rep = Report::default();
    rep.push(line(
        format!("d = {}, C(n,r) = {}", t.d(), binomial(n, r)),
        json!({ "d": t.d(), "binomial": binomial(n, r) }),
    ));
    for tuple in &t.tuples {
        let s = format!("({})", tuple.iter().join(","));
        rep.push(line(s.clone(), json!({ "tuple": tuple })));
    }
    match check_transversal(&t) {
        Ok(()) => rep.push(line("properties: hold", json!({ "properties": "hold" }))),
        Err(v) => {
            rep.failed = true;
            rep.push(line(format!("violation: {v:?}"), json!({ "violation": format!("{v:?}") })));
        }
    }
    Ok(rep)
}

fn poset_summary(p: &FinitePoset) -> Vec<Line> {
    vec![
        line(format!("elements: {}", p.len()), json!({ "elements": p.len() })),
        line(format!("relations: {}", p.relation_size()), json!({ "relations": p.relation_size() })),
        line(format!("covers: {}", p.covers().len()), json!({ "covers": p.covers().len() })),
        line(
            format!("components: {}", discrete_type_classes(p).len()),
            json!({ "components": discrete_type_classes(p).len() }),
        ),
    ]
}

fn poset_check(file: &Path) -> Outcome {
    let pf = read_poset(file)?;
    let mut r = Report { lines: poset_summary(pf.poset()), failed: false };
    if let PosetFile::Mirrored(mp) = &pf {
        match mirror_check(mp) {
            Ok(()) => r.push(line("mirror: ok", json!({ "mirror": "ok" }))),
            Err(v) => {
                r.failed = true;
                r.push(line(format!("mirror: {v}"), json!({ "mirror": v.to_string() })));
            }
        }
        let geo = geometric_discrete_check(mp);
        r.failed |= !geo.passed();
        r.lines.extend(geo.lines().into_iter().map(raw));
    }
    Ok(r)
}

fn complex_lines(c: &SimplicialComplex) -> Report {
    let mut r = Report::default();
    for text in c.to_string().lines() {
        let labels: Vec<&str> = text.split(' ').collect();
        r.push(line(text, json!({ "simplex": labels })));
    }
    r
}

fn homology_lines(h: &HomologySummary) -> Report {
    let mut r = Report::default();
    for (k, (text, g)) in h.lines().into_iter().zip(&h.groups).enumerate() {
        let torsion: Vec<String> = g.torsion.iter().map(ToString::to_string).collect();
        r.push(line(text, json!({ "dim": k, "betti": g.betti, "torsion": torsion, "reduced": h.reduced })));
    }
    r
}

fn model_build(family: Family, n: Option<usize>, k: u64, r: Option<usize>, vectors: &[String], cap: u128) -> Outcome {
    let need_n = || n.ok_or_else(|| "--n is required".to_string());
    let mut rep = Report::default();
    match family {
        Family::Power => {
            let mp = build_tphi_power(need_n()?, k, cap).map_err(|e| e.to_string())?;
            rep.lines.extend(format_mirrored(&mp).lines().map(raw));
        }
        Family::Perp => {
            if vectors.is_empty() {
                return Err("the perp family needs at least one --vector".into());
            }
            let vs = parse_vectors(vectors)?;
            if let Some(n) = n {
                if let Some(v) = vs.iter().find(|v| v.len() != n) {
                    return Err(format!("vector {v} does not have length {n}"));
                }
            }
            let model = build_perp_poset(&vs, k).map_err(|e| e.to_string())?;
            rep.push(caveat_line());
            let pruned = model.pruned_strata.iter().join(" ");
            rep.push(line(format!("# pruned strata: {pruned}"), json!({ "pruned_strata": model.pruned_strata })));
            rep.lines.extend(format_mirrored(&model.mirrored).lines().map(raw));
        }
        Family::Grassmannian => {
            let n = need_n()?;
            let r = r.ok_or_else(|| "--r is required".to_string())?;
            let phis = enum_grassmannian(n, r, k, cap, true).map_err(|e| e.to_string())?;
            rep.lines.extend(gp_lines(&phis, n, r));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("tphi").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn hfcalc_antipodes() {
        assert_eq!(call(&["hfcalc", "0/1 + 1/2"]), (0, "FULL +0\n".into(), String::new()));
        assert_eq!(call(&["hfcalc", "1/3 * 1/2"]).1, "5/6\n");
        assert_eq!(call(&["hfcalc", "-1/4"]).1, "3/4\n");
        assert_eq!(call(&["hfcalc", "0/1", "+", "1/4"]).1, "[0/1,1/4]\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, err) = call(&["hfcalc", "x/y"]);
        assert_eq!(code, 2);
        assert_eq!(err.lines().count(), 1);
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn transversal_output() {
        let (code, out, _) = call(&["transversal", "--n", "3", "--r", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "d = 3, C(n,r) = 3\n(1,2)\n(1,3)\n(2,3)\nproperties: hold\n");
    }

    #[test]
    fn json_lines() {
        let (_, out, _) = call(&["--format", "json-lines", "hfcalc", "0/1 + 1/2"]);
        assert_eq!(out, "{\"expr\":\"0/1 + 1/2\",\"result\":\"FULL +0\"}\n");
    }
}
