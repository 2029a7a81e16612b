use serde_json::{json, Map, Value};

use higgsrel::classes::{abcu_table, ideal_generators, xi, xi_via_phi};
use higgsrel::exact::parse_poly;
use higgsrel::localize::{is_equivariant_relation, RelationReport};
use higgsrel::series::{bivariate_identity_check, ode_check_f0};
use higgsrel::verify::{
    check_main_theorem, ekhad_check, l_matrix_sweep, lemma101_sweep, lemma51_sweep, product_and_stability_checks,
    residue_sweep, suite_dims, Check, DimReport, EkhadGrid, MainTheoremReport,
};

use crate::{CheckArgs, Common, Failure, Format, GenArgs, Suite, VerifyArgs};

const SCHEMA: u32 = 1;

fn cells(common: &Common) -> Vec<(usize, usize)> {
    let ns = common.n.values();
    common
        .g
        .values()
        .into_iter()
        .flat_map(|g| ns.iter().map(move |&n| (g, n)))
        .collect()
}

fn require_moduli_genus(common: &Common) -> Result<(), Failure> {
    if common.g.lo < 2 {
        return Err(Failure::Usage(format!("genus must be at least 2, got {}", common.g)));
    }
    Ok(())
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn progress(msg: &str) {
    eprintln!("[higgsrel] {msg}");
}

pub fn gen(args: &GenArgs) -> Result<bool, Failure> {
    let mut results = Vec::new();
    for (g, n) in cells(&args.common) {
        let gens = ideal_generators(g, n, args.max_degree);
        let rows: Vec<Value> = gens
            .rhos
            .iter()
            .map(|(i, p)| {
                json!({
                    "c": i.c, "r": i.r, "s": i.s, "t": i.t,
                    "degree": i.total_degree(),
                    "poly": p.to_string(),
                })
            })
            .collect();
        let gamma = gens.gamma.as_ref().map(|p| {
            json!({ "power": g + 1, "degree": 3 * (g + 1), "poly": p.to_string() })
        });
        if args.common.format == Format::Text {
            println!("I^{g}_{n} generators through total degree {}", args.max_degree);
            for (i, p) in &gens.rhos {
                println!("  deg {:>2}  (c={},r={},s={},t={}): {p}", i.total_degree(), i.c, i.r, i.s, i.t);
            }
            if let Some(p) = &gens.gamma {
                println!("  deg {:>2}  gamma^{}: {p}", 3 * (g + 1), g + 1);
            }
        }
        results.push(json!({
            "g": g, "n": n, "max_degree": args.max_degree,
            "generators": rows, "gamma": gamma,
        }));
    }
    if args.common.format == Format::Json {
        print_json(&json!({ "schema": SCHEMA, "command": "gen", "results": results }));
    }
    Ok(true)
}

fn print_report_text(r: &RelationReport) {
    println!(
        "M^{}_{}: {} (total degree {})  {}",
        r.g,
        r.n,
        r.poly,
        r.degree,
        if r.verdict { "RELATION" } else { "NOT A RELATION" }
    );
    for c in &r.components {
        let label = match (c.d, c.m) {
            (Some(d), Some(m)) => format!("{}(d={d}, m={m})", c.kind),
            _ => c.kind.clone(),
        };
        match &c.witness {
            Some(w) => println!("  {label:<16} nonzero  witness: {w}"),
            None => println!("  {label:<16} zero"),
        }
    }
}

pub fn check(args: &CheckArgs) -> Result<bool, Failure> {
    require_moduli_genus(&args.common)?;
    let poly = parse_poly(&args.poly, &abcu_table())?;
    let mut reports = Vec::new();
    for (g, n) in cells(&args.common) {
        reports.push(is_equivariant_relation(g, n, &poly)?);
    }
    let verdict = reports.iter().all(|r| r.verdict);
    match args.common.format {
        Format::Text => reports.iter().for_each(print_report_text),
        Format::Json => {
            let mut v = json!({ "schema": SCHEMA, "command": "check", "verdict": verdict });
            v["reports"] = serde_json::to_value(&reports).expect("reports serialize");
            print_json(&v);
        }
    }
    Ok(verdict)
}

/// Everything one suite produced.
#[derive(Default)]
struct SuiteOutput {
    checks: Vec<Check>,
    dims: Vec<DimReport>,
    main: Vec<MainTheoremReport>,
}

fn series_order(args: &VerifyArgs, g: usize, n: usize) -> Result<usize, Failure> {
    if let Some(o) = args.order {
        return Ok(o);
    }
    match std::env::var("HIGGSREL_ORDER") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("HIGGSREL_ORDER must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(2 * (g + n) + 4),
    }
}

fn run_suite(suite: Suite, args: &VerifyArgs, out: &mut SuiteOutput) -> Result<(), Failure> {
    let common = &args.common;
    match suite {
        Suite::Dims => {
            progress(&format!("dims over g={} n={}", common.g, common.n));
            for (c, r) in suite_dims(&common.g.values(), &common.n.values()) {
                out.checks.push(c);
                out.dims.extend(r);
            }
        }
        Suite::Main => {
            for (g, n) in cells(common) {
                let d_max = args.max_degree.unwrap_or((3 * g + 3 + n) as u32);
                progress(&format!("oracle against ideal, g={g} n={n}, D<={d_max}"));
                let name = format!("oracle g={g} n={n}");
                match check_main_theorem(g, n, d_max) {
                    Ok(r) => {
                        let bad: Vec<String> =
                            r.degrees.iter().filter(|d| !d.equal).map(|d| d.degree.to_string()).collect();
                        let detail = if bad.is_empty() {
                            format!("all {} degrees equal", r.degrees.len())
                        } else {
                            format!("mismatch in degrees {}", bad.join(","))
                        };
                        out.checks.push(Check::new(name, r.pass, detail));
                        out.main.push(r);
                    }
                    Err(e) => out.checks.push(Check::error(name, &e)),
                }
            }
        }
        Suite::Identities => {
            progress("product identity, stability, L matrix, recurrences");
            out.checks.extend(product_and_stability_checks());
            out.checks.push(l_matrix_sweep(12));
            out.checks.push(ekhad_check(&EkhadGrid::default()));
        }
        Suite::Series => {
            for (g, n) in cells(common) {
                let order = series_order(args, g, n)?;
                progress(&format!("series checks, g={g}, order {order}"));
                for k in 0..=2 {
                    out.checks.push(Check::new(
                        format!("ode g={g} k={k}"),
                        ode_check_f0(g, k, order),
                        format!("order {order}"),
                    ));
                    out.checks.push(Check::new(
                        format!("bivariate g={g} k={k}"),
                        bivariate_identity_check(g, k, order),
                        format!("order {order}"),
                    ));
                }
                let phi_ok = (0..=3).all(|k| (0..=10).all(|r| xi_via_phi(g, k, r) == xi(g, k, r)));
                out.checks.push(Check::new(format!("xi via phi g={g}"), phi_ok, "r<=10, k<=3"));
            }
        }
        Suite::Sympow => {
            progress(&format!("symmetric-product checks, seed {}", args.seed));
            out.checks.push(residue_sweep(8, 4, 20, args.seed));
            out.checks.push(lemma51_sweep(8, 4, 4, 8));
            out.checks.push(lemma101_sweep(3, 5, 2));
        }
        Suite::All => {
            for s in [Suite::Dims, Suite::Main, Suite::Identities, Suite::Series, Suite::Sympow] {
                run_suite(s, args, out)?;
            }
        }
    }
    Ok(())
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Dims => "dims",
        Suite::Main => "main",
        Suite::Identities => "identities",
        Suite::Series => "series",
        Suite::Sympow => "sympow",
        Suite::All => "all",
    }
}

fn print_dims_table(dims: &[DimReport]) {
    println!("{:>3} {:>3} {:>9} {:>7} {:>7}  equal", "g", "n", "quotient", "region", "dim_HI");
    for d in dims {
        println!(
            "{:>3} {:>3} {:>9} {:>7} {:>7}  {}",
            d.g, d.n, d.quotient, d.region, d.dim_hi, d.equal
        );
    }
}

fn print_main_text(r: &MainTheoremReport) {
    println!("g={} n={}: degree  oracle  ideal", r.g, r.n);
    for d in &r.degrees {
        println!(
            "  {:>6} {:>7} {:>6}  {}",
            d.degree,
            d.oracle_dim,
            d.ideal_dim,
            if d.equal { "equal" } else { "DIFFERENT" }
        );
    }
}

pub fn verify(args: &VerifyArgs) -> Result<bool, Failure> {
    if args.suite != Suite::Identities && args.suite != Suite::Sympow {
        require_moduli_genus(&args.common)?;
    }
    let mut out = SuiteOutput::default();
    run_suite(args.suite, args, &mut out)?;
    let pass = out.checks.iter().all(|c| c.pass);
    match args.common.format {
        Format::Text => {
            if !out.dims.is_empty() {
                print_dims_table(&out.dims);
            }
            out.main.iter().for_each(print_main_text);
            for c in &out.checks {
                println!("{}  {}  {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            let failed = out.checks.iter().filter(|c| !c.pass).count();
            println!(
                "suite {}: {} checks, {} failed",
                suite_name(args.suite),
                out.checks.len(),
                failed
            );
        }
        Format::Json => {
            let mut v = Map::new();
            v.insert("schema".into(), json!(SCHEMA));
            v.insert("command".into(), json!("verify"));
            v.insert("suite".into(), json!(suite_name(args.suite)));
            v.insert("pass".into(), json!(pass));
            v.insert("checks".into(), serde_json::to_value(&out.checks).expect("serialize"));
            if !out.dims.is_empty() {
                v.insert("dims".into(), serde_json::to_value(&out.dims).expect("serialize"));
            }
            if !out.main.is_empty() {
                v.insert("main".into(), serde_json::to_value(&out.main).expect("serialize"));
            }
            print_json(&Value::Object(v));
        }
    }
    Ok(pass)
}
