use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use binet_core::angular::{
    build, casimir_ratio, casimir_suf2, symmetric_report, verify_commutators, verify_tilde,
    AngularRep, Spin, Variant,
};
use binet_core::calculus::{
    golden_derivative, golden_exp, golden_trig, jackson_antiderivative, ExpKind, FnRepr,
    SeriesValue, TrigKind,
};
use binet_core::fibonomial::{
    binomial_coefficients, fibonomial, golden_binomial, golden_polynomial, remarkable_limit,
    BinomialForm, UnivarPoly,
};
use binet_core::golden::{fib_exact, fib_extended_decimal, ratio_sequence};
use binet_core::hp::{Ctx, Precision};
use binet_core::oscillator::{energy_ratios, invert_number, spectrum, Parity};
use binet_core::record::complex_json;
use binet_core::verify::Fault;
use binet_core::{verify_all, OutputRecord, Profile, Status, Table, VerifyOptions};

use crate::args::*;
use crate::render::{complex_text, kv, num, to_csv, Rendered};
use crate::CliError;

type CmdResult = Result<Rendered, CliError>;

pub(crate) fn dispatch(cli: &Cli) -> CmdResult {
    Precision::new(cli.precision)?;
    if let Some(t) = cli.tol {
        if !(t.is_finite() && t >= 0.0) {
            return Err(CliError::Usage(format!(
                "--tol must be finite and non-negative, got {t}"
            )));
        }
    }
    let p = cli.precision;
    match &cli.command {
        Command::Fib { n } => fib(*n, p),
        Command::Fibx { re, im } => fibx(re, im, p),
        Command::Fibonomial { n, k } => fibonomial_cmd(*n, *k, p),
        Command::Binom { n, form } => binom(*n, *form, p),
        Command::Poly { n, a } => poly(*n, a, p),
        Command::Deriv { coeffs, x } => deriv(coeffs, *x, p),
        Command::Exp { x, im, kind, terms } => exp(Complex64::new(*x, *im), *kind, *terms, p),
        Command::Trig { x, im, kind, terms } => trig(Complex64::new(*x, *im), *kind, *terms, p),
        Command::Integrate { coeffs, x, terms } => integrate(coeffs, *x, *terms, p),
        Command::Spectrum { n_max, hbar_omega } => spectrum_cmd(*n_max, *hbar_omega, p),
        Command::Ratios { kind, n_max } => ratios(*kind, *n_max, p),
        Command::Angmom { variant, j } => angmom(*variant, j, cli.tol.unwrap_or(1e-10), p),
        Command::InvertN { value, parity } => invert(value, *parity, p),
        Command::Limit { y, n, terms } => limit(*y, *n, *terms, p),
        Command::Verify {
            profile,
            only,
            fault,
        } => verify(cli, *profile, only.clone(), *fault),
        Command::PlotData { kind, n_max, out } => plot_data(*kind, *n_max, out, p),
    }
}

fn int_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

fn plain_table(t: &Table) -> String {
    let widths: Vec<usize> = (0..t.header().len())
        .map(|c| {
            t.rows()
                .iter()
                .map(|r| r[c].chars().count())
                .chain([t.header()[c].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        let s: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        s.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(t.header());
    for r in t.rows() {
        out.push_str(&line(r));
    }
    out
}

fn table_result(command: &str, p: u32, params: Vec<(&str, Value)>, table: Table) -> Rendered {
    let mut rec = OutputRecord::new(command, p).with_value(table.to_json_rows());
    for (k, v) in params {
        rec = rec.param(k, v);
    }
    Rendered::new(rec, plain_table(&table), table)
}

fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let t = s.trim();
    if let Ok(r) = BigRational::from_str(t) {
        return Ok(r);
    }
    t.parse::<f64>()
        .ok()
        .and_then(BigRational::from_float)
        .ok_or_else(|| CliError::Usage(format!("not a rational number: {s:?}")))
}

fn parse_poly(coeffs: &str) -> Result<FnRepr, CliError> {
    let c = coeffs
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FnRepr::polynomial(UnivarPoly::new(c)))
}

fn coeff_table(p: &UnivarPoly<BigRational>) -> Table {
    let mut t = Table::new(["k", "coefficient"]);
    for (k, c) in p.coeffs().iter().enumerate() {
        t.push([k.to_string(), c.to_string()]);
    }
    t
}

fn fib(n: i64, p: u32) -> CmdResult {
    let v = fib_exact(n)?;
    let mut t = Table::new(["n", "F_n"]);
    t.push([n.to_string(), v.to_string()]);
    let rec = OutputRecord::new("fib", p)
        .param("n", n)
        .with_value(int_json(&v));
    Ok(Rendered::new(rec, v.to_string(), t))
}

fn fibx(re: &str, im: &str, p: u32) -> CmdResult {
    let g = fib_extended_decimal(re, im, p)?;
    let (sr, si) = g.to_strings();
    let z = g.to_c64();
    let mut t = Table::new(["re", "im"]);
    t.push([sr.clone(), si.clone()]);
    let rec = OutputRecord::new("fibx", p)
        .param("re", re)
        .param("im", im)
        .with_value(complex_json(z));
    Ok(Rendered::new(rec, complex_text(&sr, &si), t))
}

fn fibonomial_cmd(n: i64, k: i64, p: u32) -> CmdResult {
    let v = fibonomial(n, k)?;
    let mut t = Table::new(["n", "k", "fibonomial"]);
    t.push([n.to_string(), k.to_string(), v.to_string()]);
    let rec = OutputRecord::new("fibonomial", p)
        .param("n", n)
        .param("k", k)
        .with_value(int_json(&v));
    Ok(Rendered::new(rec, v.to_string(), t))
}

fn binom(n: u32, form: FormArg, p: u32) -> CmdResult {
    let (form, name) = match form {
        FormArg::Product => (BinomialForm::Product, "product"),
        FormArg::Expansion => (BinomialForm::Expansion, "expansion"),
    };
    let poly = golden_binomial(n, form)?;
    let coeffs = binomial_coefficients(&poly, n);
    // coefficient of x^{n-k} y^k written as a + b·φ
    let mut t = Table::new(["k", "a", "b"]);
    for (k, c) in coeffs.iter().enumerate() {
        t.push([k.to_string(), c.a.to_string(), c.b.to_string()]);
    }
    let rec = OutputRecord::new("binom", p)
        .param("n", n)
        .param("form", name)
        .with_value(json!({ "polynomial": poly.to_string(), "coefficients": t.to_json_rows() }));
    Ok(Rendered::new(rec, poly.to_string(), t))
}

fn poly(n: u32, a: &str, p: u32) -> CmdResult {
    let point = parse_rational(a)?;
    let poly = golden_polynomial(n, &point)?;
    let t = coeff_table(&poly);
    let rec = OutputRecord::new("poly", p)
        .param("n", n)
        .param("a", point.to_string())
        .with_value(json!({ "polynomial": poly.to_string(), "coefficients": t.to_json_rows() }));
    Ok(Rendered::new(rec, poly.to_string(), t))
}

fn deriv(coeffs: &str, x: Option<f64>, p: u32) -> CmdResult {
    let f = parse_poly(coeffs)?;
    let FnRepr::Polynomial(d) = golden_derivative(&f) else {
        return Err(CliError::Domain(
            "derivative of a polynomial is a polynomial".into(),
        ));
    };
    let mut rec = OutputRecord::new("deriv", p).param("coeffs", coeffs);
    let mut plain = format!("D_F f = {d}");
    let mut value =
        json!({ "derivative": d.to_string(), "coefficients": coeff_table(&d).to_json_rows() });
    let table = match x {
        None => coeff_table(&d),
        Some(x) => {
            let v = d.eval(Complex64::new(x, 0.0));
            rec = rec.param("x", x);
            plain.push_str(&format!("\nD_F f({x}) = {}", num(v.re)));
            value["at"] = json!({ "x": x, "value": complex_json(v) });
            let mut t = Table::new(["x", "re", "im"]);
            t.push([num(x), num(v.re), num(v.im)]);
            t
        }
    };
    Ok(Rendered::new(rec.with_value(value), plain, table))
}

fn series_result(command: &str, p: u32, params: Vec<(&str, Value)>, s: SeriesValue) -> Rendered {
    let mut t = Table::new(["re", "im", "terms_used", "tail_bound"]);
    t.push([
        num(s.value.re),
        num(s.value.im),
        s.terms_used.to_string(),
        num(s.tail_bound),
    ]);
    let mut rec = OutputRecord::new(command, p).with_value(json!({
        "value": complex_json(s.value),
        "terms_used": s.terms_used,
        "tail_bound": s.tail_bound,
    }));
    for (k, v) in params {
        rec = rec.param(k, v);
    }
    let plain = kv(&[
        ("value", complex_text(&num(s.value.re), &num(s.value.im))),
        ("terms used", s.terms_used.to_string()),
        ("tail bound", format!("{:e}", s.tail_bound)),
    ]);
    Rendered::new(rec, plain, t)
}

fn exp(x: Complex64, kind: ExpArg, terms: usize, p: u32) -> CmdResult {
    let (k, name) = match kind {
        ExpArg::Small => (ExpKind::SmallE, "e"),
        ExpArg::Big => (ExpKind::BigE, "E"),
    };
    let s = golden_exp(x, k, terms)?;
    Ok(series_result(
        "exp",
        p,
        vec![
            ("x", complex_json(x)),
            ("kind", json!(name)),
            ("terms", json!(terms)),
        ],
        s,
    ))
}

fn trig(x: Complex64, kind: TrigArg, terms: usize, p: u32) -> CmdResult {
    let (k, name) = match kind {
        TrigArg::Cos => (TrigKind::Cos, "cos"),
        TrigArg::Sin => (TrigKind::Sin, "sin"),
        TrigArg::Cosh => (TrigKind::Cosh, "cosh"),
        TrigArg::Sinh => (TrigKind::Sinh, "sinh"),
    };
    let s = golden_trig(x, k, terms)?;
    Ok(series_result(
        "trig",
        p,
        vec![
            ("x", complex_json(x)),
            ("kind", json!(name)),
            ("terms", json!(terms)),
        ],
        s,
    ))
}

fn integrate(coeffs: &str, x: f64, terms: usize, p: u32) -> CmdResult {
    let g = parse_poly(coeffs)?;
    let s = jackson_antiderivative(&g, x, terms)?;
    Ok(series_result(
        "integrate",
        p,
        vec![
            ("coeffs", json!(coeffs)),
            ("x", json!(x)),
            ("terms", json!(terms)),
        ],
        s,
    ))
}

fn spectrum_cmd(n_max: usize, hbar_omega: f64, p: u32) -> CmdResult {
    let s = spectrum(n_max, hbar_omega)?;
    let mut t = Table::new(["n", "E_n"]);
    for l in &s.levels {
        t.push([l.n.to_string(), num(l.energy)]);
    }
    Ok(table_result(
        "spectrum",
        p,
        vec![("n_max", json!(n_max)), ("hbar_omega", json!(hbar_omega))],
        t,
    ))
}

fn ratio_table(kind: RatioKind, n_max: usize, p: u32) -> Result<Table, CliError> {
    let mut ctx = Ctx::new(Precision::new(p)?);
    let mut t = Table::new(["n", "value"]);
    match kind {
        RatioKind::Fibonacci => {
            for (i, r) in ratio_sequence(n_max, p)?.iter().enumerate() {
                t.push([(i + 1).to_string(), ctx.format(r, p)]);
            }
        }
        RatioKind::Energy => {
            for (i, r) in energy_ratios(n_max, p)?.iter().enumerate() {
                t.push([i.to_string(), ctx.format(r, p)]);
            }
        }
        RatioKind::Casimir => {
            let j_max = u32::try_from(n_max)
                .map_err(|_| CliError::Usage(format!("n_max {n_max} is too large")))?;
            for r in casimir_ratio(j_max)? {
                t.push([r.j.to_string(), num(r.value)]);
            }
        }
    }
    Ok(t)
}

fn ratio_name(kind: RatioKind) -> &'static str {
    match kind {
        RatioKind::Fibonacci => "fibonacci",
        RatioKind::Energy => "energy",
        RatioKind::Casimir => "casimir",
    }
}

fn ratios(kind: RatioKind, n_max: usize, p: u32) -> CmdResult {
    let t = ratio_table(kind, n_max, p)?;
    Ok(table_result(
        "ratios",
        p,
        vec![("kind", json!(ratio_name(kind))), ("n_max", json!(n_max))],
        t,
    ))
}

fn basis_table(rep: &AngularRep) -> Table {
    let mut t = Table::new([
        "k",
        "m",
        "n1",
        "n2",
        "j_plus_re",
        "j_plus_im",
        "j_minus_re",
        "j_minus_im",
        "casimir_re",
        "casimir_im",
    ]);
    let d = rep.dim();
    let s = rep.j;
    for k in 0..d {
        let (n1, n2) = s.occupations(k);
        let up = if k + 1 < d {
            rep.j_plus[(k + 1, k)]
        } else {
            Complex64::new(0.0, 0.0)
        };
        let down = if k > 0 {
            rep.j_minus[(k - 1, k)]
        } else {
            Complex64::new(0.0, 0.0)
        };
        let cas = rep.casimir[(k, k)];
        t.push([
            k.to_string(),
            num(s.m(k)),
            n1.to_string(),
            n2.to_string(),
            num(up.re),
            num(up.im),
            num(down.re),
            num(down.im),
            num(cas.re),
            num(cas.im),
        ]);
    }
    t
}

/// Scalar leaves of a report, with `{value, row, col}` residuals collapsed
/// to their value.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) if map.contains_key("value") && map.contains_key("row") => {
            out.push((prefix.to_string(), map["value"].to_string()));
        }
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, out);
            }
        }
        Value::Array(items) if items.len() <= 4 && items.iter().all(|i| !i.is_object()) => {
            out.push((prefix.to_string(), v.to_string()));
        }
        Value::Array(items) => out.push((prefix.to_string(), format!("{} entries", items.len()))),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        _ => out.push((prefix.to_string(), v.to_string())),
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(|e| CliError::Domain(e.to_string()))
}

fn angmom(variant: VariantArg, label: &str, tol: f64, p: u32) -> CmdResult {
    let s = Spin::parse(label)?;
    let variant = match variant {
        VariantArg::Standard => Variant::StandardF,
        VariantArg::Symmetric => Variant::SymmetricIphi,
        VariantArg::Tilde => Variant::TildeF,
    };
    let rep = build(variant, s);
    let report = match variant {
        Variant::StandardF => {
            let mut r = to_value(&verify_commutators(s, tol)?)?;
            let forms = casimir_suf2(s);
            r["casimir_eigenvalue"] = complex_json(forms.eigenvalue);
            r["casimir_forms_residual"] = json!(forms.forms_residual.value);
            r["casimir_eigen_residual"] = json!(forms.eigen_residual.value);
            r
        }
        Variant::SymmetricIphi => to_value(&symmetric_report(s))?,
        Variant::TildeF => to_value(&verify_tilde(s, tol))?,
    };
    let mut report = report;
    if report.get("j").is_some() {
        report["j"] = json!(s.to_string());
    }
    let table = basis_table(&rep);
    let mut checks = Vec::new();
    flatten("", &report, &mut checks);
    let pairs: Vec<(&str, String)> = checks
        .iter()
        .map(|(k, v)| (k.as_str(), v.clone()))
        .collect();
    let plain = format!(
        "{variant} j = {s} (dim {})\n\n{}\n{}",
        rep.dim(),
        plain_table(&table),
        kv(&pairs)
    );
    let rec = OutputRecord::new("angmom", p)
        .param("variant", variant.name())
        .param("j", s.to_string())
        .param("tol", tol)
        .with_value(json!({
            "dim": rep.dim(),
            "basis": table.to_json_rows(),
            "report": report,
        }));
    Ok(Rendered::new(rec, plain, table))
}

fn invert(value: &str, parity: ParityArg, p: u32) -> CmdResult {
    let f = BigInt::from_str(value.trim())
        .map_err(|_| CliError::Usage(format!("not an integer: {value:?}")))?;
    let candidates: &[Parity] = match parity {
        ParityArg::Even => &[Parity::Even],
        ParityArg::Odd => &[Parity::Odd],
        ParityArg::Auto => &[Parity::Even, Parity::Odd],
    };
    let mut found = Vec::new();
    let mut last_err = None;
    for &par in candidates {
        match invert_number(&f, par, p) {
            Ok(n) => found.push(n),
            Err(e) => last_err = Some(e),
        }
    }
    let Some(&n) = found.first() else {
        if parity == ParityArg::Auto {
            return Err(CliError::Domain(format!(
                "{f} is not a Fibonacci number F_n with n >= 3 of either parity"
            )));
        }
        return Err(last_err.expect("one parity was tried").into());
    };
    let mut t = Table::new(["value", "n"]);
    t.push([f.to_string(), n.to_string()]);
    let rec = OutputRecord::new("invert-n", p)
        .param("value", int_json(&f))
        .param(
            "parity",
            match parity {
                ParityArg::Even => "even",
                ParityArg::Odd => "odd",
                ParityArg::Auto => "auto",
            },
        )
        .with_value(n);
    Ok(Rendered::new(rec, n.to_string(), t))
}

fn limit(y: f64, n: usize, terms: usize, p: u32) -> CmdResult {
    let r = remarkable_limit(Complex64::new(y, 0.0), n, terms)?;
    let mut t = Table::new([
        "n",
        "lhs_re",
        "lhs_im",
        "rhs_re",
        "rhs_im",
        "difference",
        "tail_bound",
    ]);
    t.push([
        n.to_string(),
        num(r.lhs.re),
        num(r.lhs.im),
        num(r.rhs.value.re),
        num(r.rhs.value.im),
        num(r.difference),
        num(r.rhs.tail_bound),
    ]);
    let rec = OutputRecord::new("limit", p)
        .param("y", y)
        .param("n", n)
        .param("terms", terms)
        .with_value(json!({
            "lhs": complex_json(r.lhs),
            "rhs": complex_json(r.rhs.value),
            "difference": r.difference,
            "rhs_tail_bound": r.rhs.tail_bound,
        }));
    let plain = kv(&[
        (
            "(1 + y/phi^n)_F^n",
            complex_text(&num(r.lhs.re), &num(r.lhs.im)),
        ),
        (
            "e_{-phi^2}(y/sqrt5)",
            complex_text(&num(r.rhs.value.re), &num(r.rhs.value.im)),
        ),
        ("difference", format!("{:e}", r.difference)),
        ("series tail bound", format!("{:e}", r.rhs.tail_bound)),
    ]);
    Ok(Rendered::new(rec, plain, t))
}

fn verify(
    cli: &Cli,
    profile: ProfileArg,
    only: Option<String>,
    fault: Option<FaultArg>,
) -> CmdResult {
    let opts = VerifyOptions {
        profile: match profile {
            ProfileArg::Default => Profile::Default,
            ProfileArg::Strict => Profile::Strict,
        },
        tol: cli.tol,
        seed: cli.seed,
        only,
        fault: fault.map(|f| match f {
            FaultArg::Ladder => Fault::Ladder,
            FaultArg::Fibonacci => Fault::Fibonacci,
        }),
    };
    let report = verify_all(&opts).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut t = Table::new([
        "id",
        "status",
        "max_residual",
        "tol",
        "anchor",
        "range",
        "notes",
    ]);
    let mut plain = String::new();
    for e in &report.entries {
        let tol = e
            .tol
            .map(|x| format!("{x:e}"))
            .unwrap_or_else(|| "exact".into());
        t.push([
            e.id.clone(),
            e.status.to_string(),
            format!("{:e}", e.max_residual),
            tol.clone(),
            e.anchor.clone(),
            e.range.clone(),
            e.notes.clone(),
        ]);
        let tag = match e.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::KnownDeviation => "KNOWN",
        };
        plain.push_str(&format!(
            "{tag:<5}  {:<34}  {:>10.3e}  {:<7}  {}\n",
            e.id, e.max_residual, tol, e.notes
        ));
    }
    let s = &report.summary;
    plain.push_str(&format!(
        "\n{} pass, {} fail, {} known-deviation\n",
        s.pass, s.fail, s.known_deviation
    ));
    let mut rec = OutputRecord::new("verify", cli.precision)
        .param("profile", to_value(&opts.profile)?)
        .param("seed", opts.seed);
    if let Some(only) = &opts.only {
        rec = rec.param("only", only.as_str());
    }
    if let Some(f) = opts.fault {
        rec = rec.param("fault", to_value(&f)?);
    }
    if let Some(tol) = opts.tol {
        rec = rec.param("tol", tol);
    }
    let mut out = Rendered::new(rec.with_value(to_value(&report)?), plain, t);
    out.verification_failed = !report.ok();
    Ok(out)
}

fn plot_data(kind: PlotKind, n_max: usize, out: &std::path::Path, p: u32) -> CmdResult {
    let (name, table) = match kind {
        PlotKind::Ratios => ("ratios", ratio_table(RatioKind::Fibonacci, n_max, p)?),
        PlotKind::CasimirRatios => ("casimir_ratios", ratio_table(RatioKind::Casimir, n_max, p)?),
        PlotKind::Spectrum => {
            let s = spectrum(n_max, 1.0)?;
            let mut t = Table::new(["n", "E_n"]);
            for l in &s.levels {
                t.push([l.n.to_string(), num(l.energy)]);
            }
            ("spectrum", t)
        }
    };
    let text = to_csv(&table).map_err(CliError::Domain)?;
    std::fs::write(out, &text)
        .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", out.display())))?;
    let rows = table.rows().len();
    let rec = OutputRecord::new("plot-data", p)
        .param("kind", name)
        .param("n_max", n_max)
        .param("path", out.display().to_string())
        .with_value(json!({ "rows": rows, "data": table.to_json_rows() }));
    Ok(Rendered::new(
        rec,
        format!("wrote {rows} rows to {}", out.display()),
        table,
    ))
}
