//! Command-line surface: construct Miller-Moreno groups, enumerate
//! endomorphism monoids, run the Schmidt characterization with its oracle
//! cross-check, compare endomorphism semigroups, and sweep a corpus.
//!
//! Exit codes: 0 success/pass, 1 checked-and-failed, 2 internal disagreement
//! between the characterization and the subgroup-lattice oracle (a bug
//! signal), 3 input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use schmidt_lab::cayley;
use schmidt_lab::construct::{self, miller_moreno, MmParams};
use schmidt_lab::endo::enumerate_end;
use schmidt_lab::group::{are_isomorphic, Group};
use schmidt_lab::schmidt::{characterize, lattice_oracle, SchmidtParams};
use schmidt_lab::semigroup::FiniteSemigroup;
use schmidt_lab::RunConfig;

#[derive(Parser)]
#[command(
    name = "schmidt-lab",
    about = "Finite-group endomorphism semigroup workbench",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for the data-parallel cores (0 = rayon default).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Construct M(p, q, v) and write its Cayley table.
    Construct {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        v: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Enumerate the endomorphism monoid of a group read from a file.
    Endos {
        file: PathBuf,
        /// Also write the full monoid (element maps, composition table,
        /// flags) as JSON.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Decide the eight-property Schmidt characterization and cross-check it
    /// against the subgroup-lattice oracle.
    CheckSchmidt {
        file: PathBuf,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        v: Option<u32>,
    },
    /// Compare the endomorphism semigroups (and the groups) of two files.
    CompareEnd { file1: PathBuf, file2: PathBuf },
    /// Run the oracle agreement and pairwise endomorphism-semigroup
    /// comparison over a corpus.
    Sweep {
        #[arg(long, value_enum, default_value_t = Corpus::Catalog)]
        corpus: Corpus,
        #[arg(long, default_value_t = 24)]
        max_order: usize,
    },
    /// List catalog groups or write one to a file.
    Catalog {
        #[arg(long)]
        list: bool,
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Corpus {
    Catalog,
    Constructed,
}

fn main() -> ExitCode {
    // die quietly when stdout is a closed pipe (e.g. piped through head)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let mut cfg = RunConfig::from_env();
    #[cfg(feature = "parallel")]
    if cli.threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    {
        cfg.parallel = false;
    }
    let format = cli.format;
    match run(cli, &mut cfg, format) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli, cfg: &mut RunConfig, format: Format) -> Result<ExitCode, String> {
    match cli.command {
        Command::Construct { p, q, v, out } => cmd_construct(p, q, v, &out, cfg, format),
        Command::Endos { file, export } => cmd_endos(&file, export.as_deref(), cfg, format),
        Command::CheckSchmidt { file, p, q, v } => cmd_check_schmidt(&file, p, q, v, cfg, format),
        Command::CompareEnd { file1, file2 } => cmd_compare_end(&file1, &file2, cfg, format),
        Command::Sweep { corpus, max_order } => cmd_sweep(corpus, max_order, cfg, format),
        Command::Catalog { list, name, out } => cmd_catalog(list, name, out, format),
    }
}

fn load_group(path: &Path) -> Result<Group, String> {
    cayley::read_group(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_construct(
    p: u64,
    q: u64,
    v: u32,
    out: &Path,
    cfg: &RunConfig,
    format: Format,
) -> Result<ExitCode, String> {
    let params = MmParams::new(p, q, v).map_err(|e| e.to_string())?;
    let mm = miller_moreno(params, cfg).map_err(|e| e.to_string())?;
    cayley::write_group(&mm.group, out).map_err(|e| e.to_string())?;
    let center_order = mm.group.center().order();
    let derived_order = mm.group.derived_subgroup().order();
    match format {
        Format::Json => {
            let doc = json!({
                "schema": 1,
                "p": p,
                "q": q,
                "v": v,
                "u": mm.ring.u(),
                "psi": mm.ring.psi().coeffs(),
                "psi_text": mm.ring.psi().to_string(),
                "order": mm.group.order(),
                "center_order": center_order,
                "derived_order": derived_order,
                "proper_subgroups_verified": mm.proper_subgroups_verified,
                "out": out.display().to_string(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text => {
            println!("M({p},{q},{v}): order {}", mm.group.order());
            println!("u = {}", mm.ring.u());
            println!("psi(x) = {}", mm.ring.psi());
            println!("|Z(G)| = {center_order}");
            println!("|G'| = {derived_order}");
            if !mm.proper_subgroups_verified {
                println!(
                    "warning: proper-subgroup abelianity not verified (order above cap {})",
                    cfg.subgroup_cap
                );
            }
            println!("wrote {}", out.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_endos(
    file: &Path,
    export: Option<&Path>,
    cfg: &RunConfig,
    format: Format,
) -> Result<ExitCode, String> {
    let g = load_group(file)?;
    let m = enumerate_end(&g, cfg).map_err(|e| e.to_string())?;
    if let Some(path) = export {
        let doc = serde_json::to_string_pretty(&m.export()).unwrap();
        std::fs::write(path, doc).map_err(|e| e.to_string())?;
    }
    let idems: Vec<(usize, usize, usize)> = m
        .nontrivial_idempotents()
        .into_iter()
        .map(|x| {
            let (im, ker) = m.image_kernel(x);
            (x, im.len(), ker.len())
        })
        .collect();
    match format {
        Format::Json => {
            let doc = json!({
                "schema": 1,
                "order": g.order(),
                "end_size": m.len(),
                "aut_size": m.automorphism_count(),
                "i0_size": idems.len(),
                "idempotents": idems
                    .iter()
                    .map(|(x, im, ker)| json!({
                        "index": x,
                        "image_order": im,
                        "kernel_order": ker,
                    }))
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text => {
            println!("order {}", g.order());
            println!("|End| = {}", m.len());
            println!("|Aut| = {}", m.automorphism_count());
            println!("|I_0| = {}", idems.len());
            for (x, im, ker) in &idems {
                println!("idempotent {x}: |Im| = {im}, |Ker| = {ker}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check_schmidt(
    file: &Path,
    p: Option<u64>,
    q: Option<u64>,
    v: Option<u32>,
    cfg: &RunConfig,
    format: Format,
) -> Result<ExitCode, String> {
    let g = load_group(file)?;
    let params = match (p, q, v) {
        (Some(p), Some(q), Some(v)) => {
            if !schmidt_lab::num::is_prime(p) || !schmidt_lab::num::is_prime(q) || p == q || v == 0
            {
                return Err("p and q must be distinct primes and v >= 1".into());
            }
            if p > 1_000_000 || q > 1_000_000 {
                return Err("p and q must be at most 1000000".into());
            }
            Some(SchmidtParams::new(p, q, v))
        }
        (None, None, None) => None,
        _ => return Err("give all of --p, --q, --v or none".into()),
    };
    let report = characterize(&g, params, cfg).map_err(|e| e.to_string())?;
    let oracle = lattice_oracle(&g, cfg).map_err(|e| e.to_string())?;
    // when explicit parameters were given, the oracle must also agree on them
    let oracle_matches_params = match (params, oracle.params) {
        (Some(a), Some(b)) => a == b,
        (Some(_), None) => false,
        (None, _) => true,
    };
    let agree = report.verdict == (oracle.is_schmidt && oracle_matches_params);
    match format {
        Format::Json => {
            let doc = json!({
                "schema": 1,
                "characterization": report,
                "oracle": oracle,
                "agree": agree,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text => {
            println!(
                "characterization: {}",
                if report.verdict { "pass" } else { "fail" }
            );
            if let Some(ip) = &report.inferred_params {
                println!(
                    "parameters: p={} q={} v={} u={}{}",
                    ip.p,
                    ip.q,
                    ip.v,
                    ip.u,
                    if ip.inferred { " (inferred)" } else { "" }
                );
            }
            for c in &report.candidates {
                let marks: String = c.props.iter().map(|&b| if b { '+' } else { '-' }).collect();
                println!("candidate x={}: [{marks}]", c.x_index);
                for w in &c.witnesses {
                    println!("  {w}");
                }
            }
            println!(
                "oracle: {}{}",
                if oracle.is_schmidt { "Schmidt" } else { "not Schmidt" },
                oracle
                    .params
                    .map(|p| format!(" (p={}, q={}, v={})", p.p, p.q, p.v))
                    .unwrap_or_default()
            );
            println!("agreement: {}", if agree { "yes" } else { "NO (bug)" });
        }
    }
    if !agree {
        return Ok(ExitCode::from(2));
    }
    Ok(if report.verdict { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_compare_end(
    file1: &Path,
    file2: &Path,
    cfg: &RunConfig,
    format: Format,
) -> Result<ExitCode, String> {
    let g1 = load_group(file1)?;
    let g2 = load_group(file2)?;
    let m1 = enumerate_end(&g1, cfg).map_err(|e| e.to_string())?;
    let m2 = enumerate_end(&g2, cfg).map_err(|e| e.to_string())?;
    let s1 = FiniteSemigroup::from_endo_export(&m1.export()).map_err(|e| e.to_string())?;
    let s2 = FiniteSemigroup::from_endo_export(&m2.export()).map_err(|e| e.to_string())?;
    let bijection = s1.isomorphic_to(&s2, None);
    let end_iso = bijection.is_some();
    let group_iso = are_isomorphic(&g1, &g2).is_some();
    match format {
        Format::Json => {
            let doc = json!({
                "schema": 1,
                "end_sizes": [m1.len(), m2.len()],
                "end_isomorphic": end_iso,
                "end_bijection": bijection,
                "groups_isomorphic": group_iso,
                "end_isomorphic_groups_nonisomorphic": end_iso && !group_iso,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text => {
            println!("|End| = {} vs {}", m1.len(), m2.len());
            println!("End isomorphic: {}", if end_iso { "yes" } else { "no" });
            println!("groups isomorphic: {}", if group_iso { "yes" } else { "no" });
            if end_iso && !group_iso {
                println!("NOTE: endomorphism semigroups isomorphic, groups not");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// All (p, q, v) with p^u * q^v <= max_order.
fn constructed_corpus(max_order: usize, cfg: &RunConfig) -> Vec<(String, Group)> {
    construct::miller_moreno_up_to(max_order, cfg)
        .into_iter()
        .map(|mm| (construct::mm_name(mm.params), mm.group))
        .collect()
}

fn cmd_sweep(
    corpus_kind: Corpus,
    max_order: usize,
    cfg: &RunConfig,
    format: Format,
) -> Result<ExitCode, String> {
    let corpus: Vec<(String, Group)> = match corpus_kind {
        Corpus::Catalog => construct::catalog_entries()
            .into_iter()
            .filter(|e| e.group.order() <= max_order)
            .map(|e| (e.name.to_string(), e.group))
            .collect(),
        Corpus::Constructed => constructed_corpus(max_order, cfg),
    };
    let rows = schmidt_lab::schmidt::oracle_agreement(&corpus, cfg).map_err(|e| e.to_string())?;
    let disagreements: Vec<&str> = rows
        .iter()
        .filter(|r| !r.agree)
        .map(|r| r.name.as_str())
        .collect();

    // pairwise endomorphism-semigroup comparison for the Schmidt members
    let exports: Vec<Option<FiniteSemigroup>> = corpus
        .iter()
        .map(|(_, g)| {
            enumerate_end(g, cfg)
                .ok()
                .map(|m| FiniteSemigroup::from_endo_export(&m.export()).unwrap())
        })
        .collect();
    #[derive(serde::Serialize)]
    struct SchmidtMember {
        name: String,
        params: Option<SchmidtParams>,
        u_parity: String,
        end_iso_partners: Vec<String>,
        counterexample_partners: Vec<String>,
    }
    let mut members: Vec<SchmidtMember> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if !row.lattice_is_schmidt {
            continue;
        }
        let mut partners = Vec::new();
        let mut counterexamples = Vec::new();
        if let Some(si) = &exports[i] {
            for (j, other) in corpus.iter().enumerate() {
                if i == j {
                    continue;
                }
                let Some(sj) = &exports[j] else { continue };
                if si.isomorphic_to(sj, None).is_some() {
                    partners.push(other.0.clone());
                    if are_isomorphic(&corpus[i].1, &other.1).is_none() {
                        counterexamples.push(other.0.clone());
                    }
                }
            }
        }
        let u_parity = row
            .lattice_params
            .map(|p| if p.u % 2 == 1 { "odd".to_string() } else { "even".to_string() })
            .unwrap_or_else(|| "unknown".to_string());
        members.push(SchmidtMember {
            name: row.name.clone(),
            params: row.lattice_params,
            u_parity,
            end_iso_partners: partners,
            counterexample_partners: counterexamples,
        });
    }

    match format {
        Format::Json => {
            let doc = json!({
                "schema": 1,
                "corpus_size": corpus.len(),
                "rows": rows,
                "disagreements": disagreements,
                "schmidt_members": members,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text => {
            println!("corpus: {} groups (max order {max_order})", corpus.len());
            for r in &rows {
                println!(
                    "{:10} order {:3}: oracle {} characterization {} {}",
                    r.name,
                    r.order,
                    if r.lattice_is_schmidt { "schmidt " } else { "-       " },
                    if r.characterization_verdict { "pass" } else { "fail" },
                    if r.agree { "" } else { "DISAGREE" },
                );
            }
            println!("disagreements: {}", disagreements.len());
            for m in &members {
                let partner_note = if m.counterexample_partners.is_empty() {
                    "end-unique in corpus".to_string()
                } else {
                    format!("counterexample pair with {:?}", m.counterexample_partners)
                };
                println!("schmidt member {} (u {}): {}", m.name, m.u_parity, partner_note);
            }
        }
    }
    if !disagreements.is_empty() {
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_catalog(
    list: bool,
    name: Option<String>,
    out: Option<PathBuf>,
    format: Format,
) -> Result<ExitCode, String> {
    if list || name.is_none() {
        let names = construct::catalog_names();
        match format {
            Format::Json => {
                let doc = json!({ "schema": 1, "names": names });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            }
            Format::Text => {
                for n in names {
                    println!("{n}");
                }
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let name = name.unwrap();
    let g = construct::catalog(&name).map_err(|e| e.to_string())?;
    match out {
        Some(path) => {
            cayley::write_group(&g, &path).map_err(|e| e.to_string())?;
            match format {
                Format::Json => {
                    let doc = json!({
                        "schema": 1,
                        "name": name,
                        "order": g.order(),
                        "out": path.display().to_string(),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Format::Text => println!("wrote {} (order {})", path.display(), g.order()),
            }
        }
        None => print!("{}", cayley::format_group(&g)),
    }
    Ok(ExitCode::SUCCESS)
}
