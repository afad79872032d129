//! Command-line front end: pullback images, Schur products, equivariant
//! restriction tables, Chern character formulas, Bernoulli data, and the
//! on-demand verification suites.
//!
//! Exit codes: 0 on success, 1 on bad parameters or malformed input, 2 when
//! a verification suite reports a failed property.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use satogr::gkm::{equivariant_schubert, GkmGraph};
use satogr::krichever::PullbackMap;
use satogr::taut::{
    bernoulli_number, bernoulli_poly_coeffs, ch_hodge, ch_p_stated, compare_ch_p, grr_ch_p,
};
use satogr::verify::{run_suite, VerifyOptions};
use satogr::{Error, Partition, Rat, SchubertClass};

#[derive(Parser)]
#[command(
    name = "satogr",
    version,
    about = "Exact Schubert calculus on the Sato Grassmannian, tautological rings, and Krichever pullbacks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapKind {
    /// q-differential map, q >= 2 (requires --q)
    Kq,
    /// ordinary-differential map
    K1,
    /// line-bundle map (requires --h)
    Line,
}

#[derive(Subcommand)]
enum Command {
    /// Image of the r-th column generator under a pullback map
    Pullback {
        #[arg(long, value_enum)]
        map: MapKind,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        h: Option<u32>,
        #[arg(long)]
        r: u32,
        /// Equivariant reading (psi/omega terms); default is ordinary
        #[arg(long)]
        equivariant: bool,
        #[arg(long)]
        json: bool,
    },
    /// Pullback of a Schur-basis class given by its partition
    PullbackClass {
        #[arg(long, value_enum)]
        map: MapKind,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        h: Option<u32>,
        /// Partition as comma-separated weakly decreasing parts, e.g. "2,1"
        #[arg(long)]
        partition: String,
        #[arg(long)]
        equivariant: bool,
        #[arg(long)]
        json: bool,
    },
    /// Littlewood-Richardson product of two Schur classes
    SchurMult {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        json: bool,
    },
    /// Equivariant restriction table of a Schubert class on Gr(n, l)
    Gkm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        lambda: String,
        /// Multiply by a second Schubert class before printing
        #[arg(long)]
        product: Option<String>,
        /// Specialize the torus variables to i*u before printing
        #[arg(long)]
        rotation: bool,
        #[arg(long)]
        json: bool,
    },
    /// Chern character component of a q-differential Hodge bundle
    ChHodge {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        json: bool,
    },
    /// Weight-k Chern character of the universal-bundle pushforward
    ChP {
        #[arg(long)]
        k: u32,
        /// Also print the closed-form statement and the per-monomial deltas
        #[arg(long)]
        compare: bool,
        #[arg(long)]
        json: bool,
    },
    /// Bernoulli number B_n, or the polynomial B_n(x) with --poly
    Bernoulli {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        poly: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites and print one line per property
    Verify {
        /// One of cauchy, lr, gkm, newton, grr, pullback, all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Exhaustive degree bound for the LR and homomorphism sweeps
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
        /// Worker threads (0 = auto)
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

fn build_map(
    kind: MapKind,
    g: u32,
    q: Option<u32>,
    h: Option<u32>,
    equivariant: bool,
) -> satogr::error::Result<PullbackMap> {
    match kind {
        MapKind::Kq => {
            if h.is_some() {
                return Err(Error::domain("--h applies only to --map line"));
            }
            let q = q.ok_or_else(|| Error::domain("--map kq requires --q"))?;
            PullbackMap::kq(q, g, equivariant)
        }
        MapKind::K1 => {
            if q.is_some() || h.is_some() {
                return Err(Error::domain("--map k1 takes neither --q nor --h"));
            }
            PullbackMap::k1(g, equivariant)
        }
        MapKind::Line => {
            if q.is_some() {
                return Err(Error::domain("--q applies only to --map kq"));
            }
            let h = h.ok_or_else(|| Error::domain("--map line requires --h"))?;
            PullbackMap::line(g, h, equivariant)
        }
    }
}

fn parse_partition(text: &str) -> satogr::error::Result<Partition> {
    text.trim().parse::<Partition>()
}

fn print_json<T: serde::Serialize>(value: &T) -> satogr::error::Result<()> {
    let s = serde_json::to_string(value)
        .map_err(|e| Error::internal(format!("serialization failed: {e}")))?;
    println!("{s}");
    Ok(())
}

/// Renders a coefficient list (constant term first) as a polynomial in x.
fn poly_in_x(coeffs: &[Rat]) -> String {
    let mut pieces = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let var = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        let body = if var.is_empty() {
            format!("{mag}")
        } else if mag.is_one() {
            var
        } else if mag.is_integer() {
            format!("{mag}*{var}")
        } else {
            format!("({mag})*{var}")
        };
        let sign = if c.is_negative() { "-" } else { "+" };
        pieces.push((sign, body));
    }
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (sign, body)) in pieces.iter().enumerate() {
        if i == 0 {
            if *sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if *sign == "-" { " - " } else { " + " });
        }
        out.push_str(body);
    }
    out
}

fn run(command: Command) -> satogr::error::Result<i32> {
    match command {
        Command::Pullback {
            map,
            g,
            q,
            h,
            r,
            equivariant,
            json,
        } => {
            let map = build_map(map, g, q, h, equivariant)?;
            let image = map.generator_pullback(r)?;
            if json {
                print_json(&image)?;
            } else {
                println!("{image}");
            }
        }
        Command::PullbackClass {
            map,
            g,
            q,
            h,
            partition,
            equivariant,
            json,
        } => {
            let map = build_map(map, g, q, h, equivariant)?;
            let lambda = parse_partition(&partition)?;
            let class = SchubertClass::sigma(map.component_index(), lambda);
            let image = map.class_pullback(&class)?;
            if json {
                print_json(&image)?;
            } else {
                println!("{image}");
            }
        }
        Command::SchurMult { a, b, json } => {
            let a = SchubertClass::sigma(0, parse_partition(&a)?);
            let b = SchubertClass::sigma(0, parse_partition(&b)?);
            let product = a.checked_mul(&b)?;
            if json {
                print_json(&product)?;
            } else {
                println!("{product}");
            }
        }
        Command::Gkm {
            n,
            l,
            lambda,
            product,
            rotation,
            json,
        } => {
            let graph = GkmGraph::new(n, l)?;
            let lambda = parse_partition(&lambda)?;
            let mut class = equivariant_schubert(&graph, &lambda)?;
            if let Some(mu) = product {
                let mu = parse_partition(&mu)?;
                class = class.pointwise_product(&equivariant_schubert(&graph, &mu)?)?;
            }
            if rotation {
                let rot = class.specialize_rotation();
                if json {
                    print_json(&rot)?;
                } else {
                    for v in 0..graph.num_vertices() {
                        println!("{}: {}", graph.vertex_partition(v), rot.values()[v]);
                    }
                }
            } else if json {
                print_json(&class)?;
            } else {
                for v in 0..graph.num_vertices() {
                    println!("{}: {}", graph.vertex_partition(v), class.value(v));
                }
            }
        }
        Command::ChHodge { q, g, r, json } => {
            let value = ch_hodge(r, q, g)?;
            if json {
                print_json(&value)?;
            } else {
                println!("{value}");
            }
        }
        Command::ChP { k, compare, json } => {
            let grr = grr_ch_p(k)?;
            if !compare {
                if json {
                    print_json(&grr)?;
                } else {
                    println!("{grr}");
                }
                return Ok(0);
            }
            let stated = ch_p_stated(k)?;
            let deltas = compare_ch_p(k)?;
            if json {
                let deltas_json: Vec<serde_json::Value> = deltas
                    .iter()
                    .map(|d| {
                        serde_json::json!({
                            "i": d.i,
                            "j": d.j,
                            "grr": d.grr.to_string(),
                            "stated": d.stated.to_string(),
                            "delta": d.delta.to_string(),
                        })
                    })
                    .collect();
                let value = serde_json::json!({
                    "k": k,
                    "grr": serde_json::to_value(&grr)
                        .map_err(|e| Error::internal(format!("serialization failed: {e}")))?,
                    "stated": serde_json::to_value(&stated)
                        .map_err(|e| Error::internal(format!("serialization failed: {e}")))?,
                    "deltas": deltas_json,
                });
                println!("{value}");
            } else {
                println!("mechanical: {grr}");
                println!("stated:     {stated}");
                if deltas.is_empty() {
                    println!("delta:      none (exact agreement)");
                } else {
                    for d in &deltas {
                        println!(
                            "delta:      m[{},{}] mechanical {} vs stated {} (difference {})",
                            d.i, d.j, d.grr, d.stated, d.delta
                        );
                    }
                }
            }
        }
        Command::Bernoulli { n, poly, json } => {
            if poly {
                let coeffs = bernoulli_poly_coeffs(n);
                if json {
                    let strings: Vec<String> = coeffs.iter().map(Rat::to_string).collect();
                    let value = serde_json::json!({ "n": n, "coefficients": strings });
                    println!("{value}");
                } else {
                    println!("{}", poly_in_x(&coeffs));
                }
            } else {
                let b = bernoulli_number(n);
                if json {
                    let value = serde_json::json!({ "n": n, "value": b.to_string() });
                    println!("{value}");
                } else {
                    println!("{b}");
                }
            }
        }
        Command::Verify {
            suite,
            max_degree,
            threads,
        } => {
            let opts = VerifyOptions {
                max_degree,
                threads,
            };
            let results = run_suite(&suite, &opts)?;
            let mut failed = 0usize;
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                println!("{status} {}/{} - {}", r.suite, r.name, r.detail);
                if !r.passed {
                    failed += 1;
                }
            }
            println!(
                "{} checks, {} failed{}",
                results.len(),
                failed,
                if failed == 0 { "; all passed" } else { "" }
            );
            if failed > 0 {
                return Ok(2);
            }
        }
    }
    Ok(0)
}
