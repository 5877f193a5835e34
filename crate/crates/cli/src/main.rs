use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use corona_core::invariants::{cospectral_search_regular, integer_roots, is_integral_grouped, kirchhoff_formula_exact};
use corona_core::io::{load_graph, parse_family, write_edge_list, GraphJson};
use corona_core::poly::charpoly_exact;
use corona_core::spectra::max_abs_difference;
use corona_core::theorem::theorem_spectrum_grouped;
use corona_core::*;

#[derive(Parser)]
#[command(
    name = "corona",
    version,
    about = "Spectra of subdivision-vertex and subdivision-edge coronae"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named graph, e.g. `family complete_bipartite 3 3`.
    Family {
        name: String,
        params: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Build G1 ⊙ G2 or G1 ⊖ G2 and emit it with its vertex labelling.
    Corona {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        json: bool,
    },
    /// Characteristic polynomial of a corona matrix.
    Charpoly(QueryArgs),
    /// Spectrum of a corona matrix.
    Spectrum(QueryArgs),
    /// Compare the closed form against direct assembly.
    Verify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value = "both")]
        kind: KindChoice,
        #[arg(long, value_enum, default_value = "all")]
        matrix: MatrixChoice,
        #[arg(long)]
        json: bool,
    },
    /// Spanning-tree count and Kirchhoff index, formula and oracle.
    Invariants {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        json: bool,
    },
    /// Build a member of an integral family and check its spectrum.
    IntegralFamily {
        /// vertex_complete, vertex_bipartite, edge_complete or edge_bipartite
        name: String,
        params: Vec<u64>,
        #[arg(long)]
        json: bool,
    },
    /// All cospectral pairs on exactly n vertices (at most n with --regular).
    CospectralSearch {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "A")]
        matrix: MatrixArg,
        /// Restrict to regular graphs on up to n vertices.
        #[arg(long)]
        regular: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check that swapping a graph for a cospectral mate keeps the corona
    /// cospectral.
    CospectralVerify {
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
        /// The fixed graph of the corona.
        #[arg(long)]
        h: String,
        #[arg(long, value_enum, default_value = "A")]
        matrix: MatrixArg,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "vary_g1")]
        side: SideArg,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct PairArgs {
    /// Graph file (edge list or JSON) or family shorthand such as complete:5.
    #[arg(long)]
    g1: String,
    /// Graph whose copies are attached, in the same formats.
    #[arg(long)]
    g2: String,
}

#[derive(Args)]
struct QueryArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long, value_enum, default_value = "A")]
    matrix: MatrixArg,
    #[arg(long, value_enum, default_value = "direct")]
    method: Method,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Vertex,
    Edge,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindChoice {
    Vertex,
    Edge,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixArg {
    #[value(name = "A")]
    A,
    #[value(name = "L")]
    L,
    #[value(name = "Q")]
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixChoice {
    #[value(name = "A")]
    A,
    #[value(name = "L")]
    L,
    #[value(name = "Q")]
    Q,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Direct,
    Theorem,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    #[value(name = "vary_g1")]
    VaryG1,
    #[value(name = "vary_g2")]
    VaryG2,
}

impl From<KindArg> for CoronaKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Vertex => CoronaKind::SubdivisionVertex,
            KindArg::Edge => CoronaKind::SubdivisionEdge,
        }
    }
}

impl From<MatrixArg> for MatrixKind {
    fn from(m: MatrixArg) -> Self {
        match m {
            MatrixArg::A => MatrixKind::A,
            MatrixArg::L => MatrixKind::L,
            MatrixArg::Q => MatrixKind::Q,
        }
    }
}

/// Failure modes mapped to exit codes.
enum Failure {
    Mismatch,
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Core(e)) => {
            eprintln!("error: {}: {e}", e.code());
            match e {
                Error::Parse(_) | Error::InvalidGraph(_) | Error::InvalidParams(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn emit(json: bool, value: Value, text: impl FnOnce() -> String) {
    let out = if json {
        format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable"))
    } else {
        text()
    };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
}

fn load_spec(pair: &PairArgs, kind: CoronaKind) -> Result<CoronaSpec> {
    CoronaSpec::new(load_graph(&pair.g1)?, load_graph(&pair.g2)?, kind)
}

fn spectrum_json(s: &SpectrumMultiset) -> Value {
    serde_json::to_value(s.to_report()).expect("serializable")
}

fn spectrum_text(s: &SpectrumMultiset) -> String {
    s.multiplicity_view(spectra::CLUSTER_TOL)
        .iter()
        .map(|(v, k)| format!("{:>14.9}  x{k}\n", clean(*v)))
        .collect()
}

/// Prints `-0.0` as `0.0`.
fn clean(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

fn factored_text(f: &FactoredCharPoly) -> String {
    f.factors()
        .iter()
        .map(|(p, k)| {
            if *k == 1 {
                format!("({p})")
            } else {
                format!("({p})^{k}")
            }
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Family { name, params, json } => {
            let text = if params.is_empty() {
                name
            } else {
                format!("{name}:{}", params.join(","))
            };
            let g = Graph::from_family(&parse_family(&text)?)?;
            emit(json, json!(GraphJson::from(&g)), || write_edge_list(&g));
        }
        Command::Corona { pair, kind, json } => {
            let spec = load_spec(&pair, kind.into())?;
            let (g, labels) = spec.build();
            let sidecar = labels.to_sidecar();
            emit(
                json,
                json!({ "spec": spec.to_string(), "graph": GraphJson::from(&g), "labeling": sidecar }),
                || {
                    let copies = labels.copy_count();
                    format!(
                        "# {spec}\n# original {:?}, inserted {:?}, {copies} copies of size {}\n{}",
                        labels.original,
                        labels.inserted,
                        labels.copy_size(),
                        write_edge_list(&g)
                    )
                },
            );
        }
        Command::Charpoly(q) => charpoly(q)?,
        Command::Spectrum(q) => spectrum(q)?,
        Command::Verify {
            pair,
            kind,
            matrix,
            json,
        } => verify(&pair, kind, matrix, json)?,
        Command::Invariants { pair, kind, json } => invariants_cmd(&pair, kind.into(), json)?,
        Command::IntegralFamily { name, params, json } => integral(&name, &params, json)?,
        Command::CospectralSearch {
            n,
            matrix,
            regular,
            json,
        } => {
            let which = matrix.into();
            let pairs = if regular {
                cospectral_search_regular(n, which)?
            } else {
                cospectral_search(n, which)?
            };
            let items: Vec<Value> = pairs
                .iter()
                .map(|p| {
                    json!({
                        "first": GraphJson::from(&p.first),
                        "second": GraphJson::from(&p.second),
                        "charpoly": p.charpoly,
                    })
                })
                .collect();
            emit(
                json,
                json!({ "n": n, "matrix": which, "regular": regular, "pairs": items }),
                || {
                    let mut out = format!("{} {which}-cospectral pair(s)\n", pairs.len());
                    for p in &pairs {
                        out.push_str(&format!(
                            "{}\n  {:?}\n  {:?}\n",
                            p.charpoly,
                            p.first.edges(),
                            p.second.edges()
                        ));
                    }
                    out
                },
            );
        }
        Command::CospectralVerify {
            first,
            second,
            h,
            matrix,
            kind,
            side,
            json,
        } => {
            let (a, b, h) = (load_graph(&first)?, load_graph(&second)?, load_graph(&h)?);
            let side = match side {
                SideArg::VaryG1 => Side::VaryG1,
                SideArg::VaryG2 => Side::VaryG2,
            };
            let holds = verify_cospectral_corollary((&a, &b), &h, matrix.into(), kind.into(), side)?;
            emit(json, json!({ "side": side, "holds": holds }), || {
                format!("{side}: {}\n", if holds { "cospectral" } else { "NOT cospectral" })
            });
            if !holds {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn charpoly(q: QueryArgs) -> Outcome {
    let spec = load_spec(&q.pair, q.kind.into())?;
    let which: MatrixKind = q.matrix.into();
    match q.method {
        Method::Direct => {
            let p = charpoly_exact(&spec.build().0.matrix(which))?;
            emit(
                q.json,
                json!({ "spec": spec.to_string(), "matrix": which, "method": "direct", "coeffs": p }),
                || format!("{p}\n"),
            );
        }
        Method::Theorem => {
            let t = theorem_charpoly(&spec, which)?;
            let direct = charpoly_exact(&spec.build().0.matrix(which))?;
            let matches = t.expanded() == &direct;
            let spectrum = theorem_spectrum(&spec, which)?;
            let factors: Vec<Value> = t.factors().iter().map(|(f, k)| json!([f, k])).collect();
            emit(
                q.json,
                json!({
                    "spec": spec.to_string(),
                    "matrix": which,
                    "factors": factors,
                    "expanded": t.expanded(),
                    "spectrum": spectrum_json(&spectrum),
                    "oracle_match": matches,
                }),
                || format!("{}\n= {}\n", factored_text(&t), t.expanded()),
            );
            if !matches {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn spectrum(q: QueryArgs) -> Outcome {
    let spec = load_spec(&q.pair, q.kind.into())?;
    let which: MatrixKind = q.matrix.into();
    let s = match q.method {
        Method::Direct => eigenvalues_sym(&spec.build().0.matrix(which).to_f64())?,
        Method::Theorem => theorem_spectrum(&spec, which)?,
    };
    emit(q.json, spectrum_json(&s), || spectrum_text(&s));
    Ok(())
}

fn verify(pair: &PairArgs, kind: KindChoice, matrix: MatrixChoice, json: bool) -> Outcome {
    let kinds = match kind {
        KindChoice::Vertex => vec![CoronaKind::SubdivisionVertex],
        KindChoice::Edge => vec![CoronaKind::SubdivisionEdge],
        KindChoice::Both => CoronaKind::BOTH.to_vec(),
    };
    let matrices = match matrix {
        MatrixChoice::A => vec![MatrixKind::A],
        MatrixChoice::L => vec![MatrixKind::L],
        MatrixChoice::Q => vec![MatrixKind::Q],
        MatrixChoice::All => MatrixKind::SPECTRAL.to_vec(),
    };
    let (g1, g2) = (load_graph(&pair.g1)?, load_graph(&pair.g2)?);
    let mut reports = Vec::new();
    let mut all_match = true;
    for &which in &matrices {
        for &kind in &kinds {
            let start = Instant::now();
            let spec = CoronaSpec::new(g1.clone(), g2.clone(), kind)?;
            let m = spec.build().0.matrix(which);
            let theorem = theorem_charpoly(&spec, which)?;
            let oracle = charpoly_exact(&m)?;
            let residual = max_abs_difference(&theorem_spectrum(&spec, which)?, &eigenvalues_sym(&m.to_f64())?);
            let exact = theorem.expanded() == &oracle && residual <= 1e-8;
            all_match &= exact;
            reports.push(json!({
                "spec": spec.to_string(),
                "matrix": which,
                "theorem": theorem.expanded(),
                "oracle": oracle,
                "exact_match": exact,
                "residual": residual,
                "millis": start.elapsed().as_secs_f64() * 1e3,
            }));
        }
    }
    emit(json, Value::Array(reports.clone()), || {
        reports
            .iter()
            .map(|r| {
                format!(
                    "{} {}: exact_match={} residual={:.1e} ({:.1} ms)\n",
                    r["matrix"].as_str().unwrap(),
                    r["spec"].as_str().unwrap(),
                    r["exact_match"],
                    r["residual"].as_f64().unwrap(),
                    r["millis"].as_f64().unwrap()
                )
            })
            .collect()
    });
    if all_match {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn invariants_cmd(pair: &PairArgs, kind: CoronaKind, json: bool) -> Outcome {
    let spec = load_spec(pair, kind)?;
    let g = spec.build().0;
    let t_formula = spanning_trees_formula(&spec)?;
    let t_oracle = spanning_trees_oracle(&g);
    let kf_exact = kirchhoff_formula_exact(&spec)?;
    let kf_formula = kirchhoff_formula(&spec)?;
    let kf_oracle = kirchhoff_oracle(&g)?;
    let ok = t_formula == t_oracle && (kf_formula - kf_oracle).abs() <= 1e-9 * kf_oracle.abs().max(1.0);
    emit(
        json,
        json!({
            "spec": spec.to_string(),
            "spanning_trees": { "formula": t_formula.to_string(), "oracle": t_oracle.to_string() },
            "kirchhoff": { "formula": kf_formula, "formula_exact": kf_exact.to_string(), "oracle": kf_oracle },
            "match": ok,
        }),
        || {
            format!(
                "{spec}\nspanning trees: formula {t_formula}, oracle {t_oracle}\nKirchhoff index: formula {kf_exact} ({kf_formula}), oracle {kf_oracle}\n"
            )
        },
    );
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn integral(name: &str, params: &[u64], json: bool) -> Outcome {
    let params = IntegralFamilyParams::from_name(name, params)?;
    let inst = integral_family(params)?;
    let grouped = theorem_spectrum_grouped(&inst.spec, MatrixKind::A)?;
    let integral = is_integral_grouped(&grouped, 1e-7);
    let poly = theorem_charpoly(&inst.spec, MatrixKind::A)?;
    let mut splits = true;
    for (f, _) in poly.factors() {
        splits &= integer_roots(f)?.is_some();
    }
    let multiplicities: Vec<(f64, usize)> = grouped.iter().map(|&(v, k)| (clean(v.round()), k)).collect();
    emit(
        json,
        json!({
            "family": params,
            "n1": inst.n1,
            "n2": inst.n2,
            "spec": inst.spec.to_string(),
            "vertices": inst.spec.vertex_count(),
            "integral": integral,
            "factors_split_over_integers": splits,
            "multiplicities": multiplicities,
        }),
        || {
            let mut out = format!(
                "{params}: n1 = {}, n2 = {}, {} ({} vertices)\nintegral: {integral}, factors split over Z: {splits}\n",
                inst.n1,
                inst.n2,
                inst.spec,
                inst.spec.vertex_count()
            );
            for (v, k) in &multiplicities {
                out.push_str(&format!("{v:>8}  x{k}\n"));
            }
            out
        },
    );
    if integral && splits {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
