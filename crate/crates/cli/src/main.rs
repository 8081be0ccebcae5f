//! `twistral` — exact-arithmetic workbench for reflection groups, cocycle
//! twists, and Cherednik-type algebras.
//!
//! Subcommands: `verify` (run named checks or the whole suite), `characters`
//! (tables for B_n, D_n, mu(D_n) and their twists), `coinvariants`, `center`,
//! and `twist` (apply J_1, J_{-i}, eta, or eta.phi to an element).
//! Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::process::ExitCode;

use twistral::cherednik::{AlgebraFlavor, CherednikParams, EtaPhiEmbedding};
use twistral::chars::{bn_character_table, Bipartition, GroupClasses};
use twistral::coinv::{center_basis, CoinvariantQuotient, RestrictedAlgebra};
use twistral::galg::{GroupAlgebraElement, JMap};
use twistral::group::{Flavor, GroupSpec};
use twistral::linalg::minimal_polynomial;
use twistral::parse::{parse_element, Letter};
use twistral::report::{run_all, run_named, CheckOptions, CHECK_NAMES};
use twistral::scalar::{rational_from_str, Ctx, CtxExt, CycloContext};

#[derive(Parser)]
#[command(name = "twistral", version, about = "exact computations with reflection groups, cocycle twists, and Cherednik-type algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks (all by default) and print a JSON report.
    Verify(VerifyArgs),
    /// Print a character table, optionally with the twist permutation.
    Characters(CharactersArgs),
    /// Graded dimensions and character of a coinvariant algebra.
    Coinvariants(GroupArgs),
    /// Center of a restricted (braided) Cherednik algebra.
    Center(CenterArgs),
    /// Apply J_1, J_{-i}, eta, or eta.phi to an element.
    Twist(TwistArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Check names (see --list); default: all.
    names: Vec<String>,
    /// List available check names and exit.
    #[arg(long)]
    list: bool,
    /// Print the full JSON report instead of the one-line-per-check summary.
    #[arg(long)]
    json: bool,
    /// Parameter values c for identities polynomial in c.
    #[arg(long = "c", value_name = "RATIONAL")]
    c_values: Vec<String>,
    /// Largest rank for the character suites.
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    /// Cap on enumerated group order.
    #[arg(long = "cap-group-order", default_value_t = 10_000)]
    cap_group: u64,
    /// Cap on materialized algebra dimension.
    #[arg(long = "cap-dim", default_value_t = 256)]
    cap_dim: usize,
    /// Cap on polynomial degree.
    #[arg(long = "cap-degree", default_value_t = 12)]
    cap_degree: u32,
}

#[derive(Args)]
struct CharactersArgs {
    /// Group: B<n>, D<n>, or muD<n> (e.g. B2, D3, muD3).
    #[arg(long)]
    group: String,
    /// Twist to apply: none, j1, or jminusi.
    #[arg(long, default_value = "none")]
    twist: String,
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    p: u32,
    #[arg(long)]
    n: usize,
    /// Use the mystic group and the skew polynomial ring.
    #[arg(long)]
    mystic: bool,
}

#[derive(Args)]
struct CenterArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    p: u32,
    #[arg(long)]
    n: usize,
    /// Build the negative braided restricted algebra.
    #[arg(long)]
    braided: bool,
    /// Parameter c_1 (and every c_zeta).
    #[arg(long, default_value = "1")]
    c: String,
    #[arg(long = "cap-dim", default_value_t = 256)]
    cap_dim: usize,
}

#[derive(Args)]
struct TwistArgs {
    /// Map to apply: j1, jminusi, eta, or etaphi.
    #[arg(long)]
    map: String,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    p: u32,
    #[arg(long)]
    n: usize,
    /// Element in the text syntax, e.g. "x1*sg(1,2;0)*y1" or "s(1,2;0)".
    #[arg(long)]
    element: String,
    /// Parameter c_1 for etaphi (the braided source parameters).
    #[arg(long, default_value = "1")]
    c: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Characters(args) => cmd_characters(args),
        Command::Coinvariants(args) => cmd_coinvariants(args),
        Command::Center(args) => cmd_center(args),
        Command::Twist(args) => cmd_twist(args),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    if args.list {
        for name in CHECK_NAMES {
            println!("{name}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let mut opts = CheckOptions {
        max_n: args.max_n,
        group_cap: args.cap_group,
        dim_cap: args.cap_dim,
        degree_cap: args.cap_degree,
        ..CheckOptions::default()
    };
    if !args.c_values.is_empty() {
        let mut cs = Vec::new();
        for s in &args.c_values {
            cs.push(rational_from_str(s).map_err(|e| e.to_string())?);
        }
        opts.c_values = cs;
    }
    let report = if args.names.is_empty() || args.names == ["all"] {
        run_all(&opts)
    } else {
        run_named(&args.names, &opts).map_err(|e| e.to_string())?
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
    } else {
        for check in &report.checks {
            let status = match check.status {
                twistral::report::Status::Pass => "PASS",
                twistral::report::Status::Fail => "FAIL",
                twistral::report::Status::Skipped => "SKIP",
            };
            println!("{status}  {:28} {}", check.name, check.statement);
            if status == "FAIL" {
                println!("      {}", check.details);
            }
        }
        println!(
            "overall: {}",
            if report.overall { "pass" } else { "FAIL" }
        );
    }
    if report.overall {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn parse_group_name(name: &str) -> Result<(GroupSpec, bool), String> {
    let lower = name.to_lowercase().replace(['(', ')'], "");
    let (flavor_mystic, rest) = if let Some(r) = lower.strip_prefix("mud") {
        (true, r)
    } else if let Some(r) = lower.strip_prefix("d") {
        (false, r)
    } else if let Some(r) = lower.strip_prefix("b") {
        let n: usize = r.parse().map_err(|_| format!("bad group `{name}`"))?;
        return Ok((GroupSpec::b_n(n), false));
    } else {
        return Err(format!("unsupported group `{name}` (use B<n>, D<n>, muD<n>)"));
    };
    let n: usize = rest.parse().map_err(|_| format!("bad group `{name}`"))?;
    if flavor_mystic {
        Ok((GroupSpec::mystic(2, 2, n), true))
    } else {
        Ok((GroupSpec::d_n(n), false))
    }
}

fn bipartition_json(bp: &Bipartition) -> serde_json::Value {
    json!([bp.first.parts(), bp.second.parts()])
}

fn cmd_characters(args: CharactersArgs) -> Result<ExitCode, String> {
    let ctx = CycloContext::new(4);
    let (spec, _) = parse_group_name(&args.group)?;
    let n = spec.n;
    let b_classes = GroupClasses::new(GroupSpec::b_n(n));
    let table = bn_character_table(&ctx, &b_classes);

    let (classes, rows): (GroupClasses, Vec<(Bipartition, Vec<serde_json::Value>)>) =
        match (spec.flavor, spec.p) {
            (Flavor::Reflection, 1) => {
                let rows = table
                    .iter()
                    .map(|(bp, chi)| {
                        (bp.clone(), chi.values.iter().map(|v| v.to_json()).collect())
                    })
                    .collect();
                (b_classes, rows)
            }
            (Flavor::Reflection, 2) | (Flavor::Mystic, _) => {
                let sub = GroupClasses::new(spec);
                // non-split restrictions: lambda != mu on D_n, lambda != mu* on mu(D_n)
                let rows = table
                    .iter()
                    .filter(|(bp, _)| match spec.flavor {
                        Flavor::Reflection => bp.first != bp.second,
                        _ => bp.first != bp.second.dual(),
                    })
                    .map(|(bp, chi)| {
                        let res = chi.restrict(&b_classes, &sub);
                        (bp.clone(), res.values.iter().map(|v| v.to_json()).collect())
                    })
                    .collect();
                (sub, rows)
            }
            _ => return Err(format!("unsupported group `{}`", args.group)),
        };

    let mut out = json!({
        "group": classes.spec,
        "classes": classes.classes.iter().map(|c| c[0].token()).collect::<Vec<_>>(),
        "characters": rows
            .iter()
            .map(|(bp, values)| json!({"label": bipartition_json(bp), "values": values}))
            .collect::<Vec<_>>(),
    });

    match args.twist.as_str() {
        "none" => {}
        "j1" => {
            if spec.flavor != Flavor::Reflection || spec.p != 1 {
                return Err("--twist j1 applies to B<n>".into());
            }
            let report = twistral::chars::verify_b_twist(&ctx, n);
            out["twist"] = json!({
                "map": "j1",
                "permutation": report
                    .entries
                    .iter()
                    .map(|((a, b), ok)| json!({
                        "from": bipartition_json(a),
                        "to": bipartition_json(b),
                        "verified": ok,
                    }))
                    .collect::<Vec<_>>(),
                "all_verified": report.all_pass(),
            });
        }
        "jminusi" => {
            if spec.flavor == Flavor::Reflection && spec.p == 1 {
                let report = twistral::chars::verify_j1_equals_jminusi(&ctx, n);
                out["twist"] = json!({
                    "map": "jminusi",
                    "matches_j1": report.all_pass(),
                });
            } else {
                let report = twistral::chars::verify_d_bijection(&ctx, n);
                out["twist"] = json!({
                    "map": "jminusi",
                    "bijection": report
                        .entries
                        .iter()
                        .map(|((a, b), ok)| json!({
                            "from": bipartition_json(a),
                            "to": bipartition_json(b),
                            "verified": ok,
                        }))
                        .collect::<Vec<_>>(),
                    "all_verified": report.all_pass(),
                });
            }
        }
        other => return Err(format!("unknown twist `{other}`")),
    }
    println!("{}", serde_json::to_string_pretty(&out).unwrap());
    Ok(ExitCode::SUCCESS)
}

fn cmd_coinvariants(args: GroupArgs) -> Result<ExitCode, String> {
    let ctx = CycloContext::new(args.m);
    let spec = if args.mystic {
        GroupSpec::mystic(args.m, args.p, args.n)
    } else {
        GroupSpec::reflection(args.m, args.p, args.n)
    };
    spec.enumerate_capped(twistral::group::DEFAULT_GROUP_CAP)
        .map_err(|e| e.to_string())?;
    let q = CoinvariantQuotient::new(&ctx, spec, args.mystic, false);
    let character: Vec<serde_json::Value> = spec
        .enumerate()
        .iter()
        .map(|g| q.trace(g).to_json())
        .collect();
    let out = json!({
        "group": spec,
        "graded_dims": q.graded_dims,
        "total_dim": q.dim(),
        "representatives": q.reps.iter().map(|m| json!(m)).collect::<Vec<_>>(),
        "character": character,
        "affords_regular_representation": q.affords_regular_representation(),
    });
    println!("{}", serde_json::to_string_pretty(&out).unwrap());
    Ok(ExitCode::SUCCESS)
}

fn cmd_center(args: CenterArgs) -> Result<ExitCode, String> {
    let ctx = CycloContext::new(args.m);
    let c = rational_from_str(&args.c).map_err(|e| e.to_string())?;
    let flavor = if args.braided {
        AlgebraFlavor::NegativeBraided
    } else {
        AlgebraFlavor::Rational
    };
    let params = CherednikParams::constant(&ctx, args.m, args.p, ctx.zero(), ctx.from_rational(c));
    let ra = RestrictedAlgebra::new(&ctx, args.m, args.p, args.n, flavor, params);
    if ra.dim() > args.cap_dim {
        return Err(format!("dimension {} exceeds --cap-dim {}", ra.dim(), args.cap_dim));
    }
    let fa = ra.to_finite_algebra(args.cap_dim);
    let z = center_basis(&fa, &ra.generating_indices());
    let mut elements = Vec::new();
    for v in &z {
        let elem = ra.from_vec(v);
        // minimal polynomial of this central element
        let mut powers = vec![ra.to_vec(&ra.one())];
        let mut acc = ra.one();
        for _ in 0..z.len() {
            acc = ra.mul(&acc, &elem);
            powers.push(ra.to_vec(&acc));
        }
        let mp = minimal_polynomial(&ctx, &powers);
        elements.push(json!({
            "element": format!("{elem:?}"),
            "min_poly_coeffs_low_to_high": mp.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        }));
    }
    let out = json!({
        "algebra": {
            "m": args.m, "p": args.p, "n": args.n,
            "flavor": if args.braided { "negative-braided" } else { "rational" },
            "dim": ra.dim(),
        },
        "center_dim": z.len(),
        "center": elements,
    });
    println!("{}", serde_json::to_string_pretty(&out).unwrap());
    Ok(ExitCode::SUCCESS)
}

fn group_algebra_from_text(
    ctx: &Ctx,
    spec: GroupSpec,
    text: &str,
) -> Result<GroupAlgebraElement, String> {
    let terms = parse_element(text, ctx, spec.m, spec.n).map_err(|e| e.to_string())?;
    let mut out = GroupAlgebraElement::zero(ctx, spec);
    for t in terms {
        let mut g = spec.identity();
        for l in &t.letters {
            match l {
                Letter::G(h) => g = g.compose(h),
                _ => return Err("this map applies to group algebra elements".into()),
            }
        }
        if !spec.is_member(&g) {
            return Err(format!("{g} is not a member of {spec:?}"));
        }
        out.add_term(g, t.coeff);
    }
    Ok(out)
}

fn group_algebra_json(e: &GroupAlgebraElement) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = e
        .terms()
        .map(|(g, c)| json!({"g": g.token(), "coeff": c.to_json()}))
        .collect();
    serde_json::Value::Array(rows)
}

fn cmd_twist(args: TwistArgs) -> Result<ExitCode, String> {
    let needs_i = args.map == "jminusi";
    let field_m = if needs_i {
        num_lcm(4, args.m)
    } else {
        args.m
    };
    let ctx = CycloContext::new(field_m);
    match args.map.as_str() {
        "j1" | "jminusi" => {
            let spec = GroupSpec::new(args.m, 1, args.n, Flavor::FullMonomial);
            let elem = group_algebra_from_text(&ctx, spec, &args.element)?;
            let j = if args.map == "j1" {
                JMap::j_one(&ctx, args.m, args.n)
            } else {
                JMap::j_minus_i(&ctx, args.m, args.n)
            };
            let img = j.apply(&elem);
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "map": args.map,
                    "image": group_algebra_json(&img),
                }))
                .unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
        "eta" => {
            let spec = GroupSpec::reflection(args.m, args.p, args.n);
            if (args.m / args.p) % 2 != 0 {
                return Err("eta on the group algebra needs m/p even".into());
            }
            let elem = group_algebra_from_text(&ctx, spec, &args.element)?;
            let phi = twistral::cherednik::PhiMap::new(&ctx, args.m, args.p, args.n);
            let img = phi.eta(&elem);
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "map": "eta",
                    "image": group_algebra_json(&img),
                }))
                .unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
        "etaphi" => {
            let c = rational_from_str(&args.c).map_err(|e| e.to_string())?;
            let cbar = CherednikParams::constant(
                &ctx,
                args.m,
                args.p,
                ctx.zero(),
                ctx.from_rational(c),
            );
            let emb = EtaPhiEmbedding::new(&ctx, args.m, args.p, args.n, cbar);
            let elem = emb.source().parse(&args.element).map_err(|e| e.to_string())?;
            let img = emb.map(&elem);
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "map": "etaphi",
                    "target": emb.target().group(),
                    "image": emb.target().element_to_json(&img),
                }))
                .unwrap()
            );
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!("unknown map `{other}`")),
    }
}

fn num_lcm(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}
