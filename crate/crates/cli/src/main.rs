//! Command-line surface: enumeration, table checks, construction
//! evaluation, decomposition, and the named verification suite.
//!
//! Exit codes: 0 all checks pass, 1 a property is violated, 2 the input is
//! invalid, 3 a resource bound is exceeded.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};

use twoval_core::committees::format_committee;
use twoval_core::decompose::decompose;
use twoval_core::dominance::compatibility_witness;
use twoval_core::orders::format_order;
use twoval_core::profiles::{format_profile_inline, parse_profile_file};
use twoval_core::psi::{format_psi_file, parse_psi_file, EntryIndex, PsiSpec};
use twoval_core::scf::{
    csp_witness, essential_witness, format_csp_witness, format_scf_file, parse_scf_file,
};
use twoval_core::verify::run_suite;
use twoval_core::{enumerate_committees, Error, Profile, ProfileSpace, Result, ScfTable};

#[derive(Parser)]
#[command(
    name = "twoval",
    version,
    about = "Checks and decompositions for two-valued coalitionally strategy-proof \
             social choice functions over weak orders",
    after_help = "Set TWOVAL_WORKERS to bound the threads used by parallel scans."
)]
struct Cli {
    /// Emit a single-line JSON report instead of the human-readable one.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the canonical weak orders of a universe, with profile and
    /// committee counts for the society.
    Enumerate {
        voters: usize,
        alternatives: usize,
        /// Also list every profile of the space.
        #[arg(long)]
        profiles: bool,
        /// Also list every superset-closed family on the full society.
        #[arg(long)]
        committees: bool,
    },
    /// Coalitional strategy-proofness of a table file.
    CheckCsp { file: PathBuf },
    /// Dominance compatibility of a table file, over its attained pair.
    CheckCompat { file: PathBuf },
    /// Essential-basis and monotonicity conditions of a table file.
    CheckBbm { file: PathBuf },
    /// Evaluate a layered-committee spec at one profile.
    EvalPsi { spec: PathBuf, profile: PathBuf },
    /// Expand a layered-committee spec into a full table.
    PsiToTable {
        spec: PathBuf,
        /// Write the table here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decompose a table file into a layered-committee spec.
    Decompose {
        file: PathBuf,
        /// Unanimous pair-indifference profile to place first (profile file).
        #[arg(long)]
        pi: Option<PathBuf>,
        /// Destination spec file.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Decompose a table file, re-evaluate the spec, and diff the tables.
    Roundtrip { file: PathBuf },
    /// Run the named verification checks at a scale.
    VerifyTheorems {
        voters: usize,
        alternatives: usize,
        /// Seed for the sampled modes.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Everything a command reports: the instance, named counts in a stable
/// order, listing lines, and serialized witnesses. `failures` must be zero
/// exactly when the command exits 0.
struct RunReport {
    command: &'static str,
    voters: usize,
    alternatives: usize,
    pair: Option<String>,
    counts: Vec<(&'static str, u64)>,
    items: Vec<String>,
    witnesses: Vec<String>,
    elapsed: Duration,
}

impl RunReport {
    fn new(command: &'static str, space: &ProfileSpace) -> Self {
        Self {
            command,
            voters: space.num_voters(),
            alternatives: space.num_alternatives(),
            pair: None,
            counts: Vec::new(),
            items: Vec::new(),
            witnesses: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn failures(&self) -> u64 {
        self.counts
            .iter()
            .find(|(k, _)| *k == "failures")
            .map(|(_, v)| *v)
            .unwrap_or(0)
    }

    fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        match &self.pair {
            Some(p) => {
                let _ = writeln!(
                    out,
                    "instance: {} voters, {} alternatives, pair {p}",
                    self.voters, self.alternatives
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "instance: {} voters, {} alternatives",
                    self.voters, self.alternatives
                );
            }
        }
        for (k, v) in &self.counts {
            let _ = writeln!(out, "{k}: {v}");
        }
        for line in &self.items {
            let _ = writeln!(out, "{line}");
        }
        for w in &self.witnesses {
            let _ = writeln!(out, "witness:");
            for line in w.lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        let _ = writeln!(out, "elapsed: {:.2?}", self.elapsed);
        out
    }

    // Machine output omits `elapsed` so reruns stay byte-identical.
    fn render_machine(&self) -> String {
        let mut out = String::from("{");
        let _ = write!(out, "\"command\":\"{}\"", json_escape(self.command));
        let _ = write!(out, ",\"voters\":{}", self.voters);
        let _ = write!(out, ",\"alternatives\":{}", self.alternatives);
        match &self.pair {
            Some(p) => {
                let _ = write!(out, ",\"pair\":\"{}\"", json_escape(p));
            }
            None => out.push_str(",\"pair\":null"),
        }
        out.push_str(",\"counts\":{");
        for (i, (k, v)) in self.counts.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "\"{}\":{v}", json_escape(k));
        }
        out.push('}');
        for (key, list) in [("items", &self.items), ("witnesses", &self.witnesses)] {
            let _ = write!(out, ",\"{key}\":[");
            for (i, line) in list.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "\"{}\"", json_escape(line));
            }
            out.push(']');
        }
        out.push_str("}\n");
        out
    }
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::NotCsp(_) => 1,
        Error::Domain(_) | Error::Parse { .. } => 2,
        Error::Resource(_) => 3,
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::domain(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text)
        .map_err(|e| Error::domain(format!("cannot write {}: {e}", path.display())))
}

fn init_workers() {
    let Ok(text) = std::env::var("TWOVAL_WORKERS") else {
        return;
    };
    match text.parse::<usize>() {
        Ok(n) if n > 0 => {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
        _ => eprintln!("warning: ignoring TWOVAL_WORKERS={text:?}, expected a positive integer"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_workers();
    let started = Instant::now();
    match run(&cli.command, started) {
        Ok(Some(report)) => {
            let text = if cli.machine {
                report.render_machine()
            } else {
                report.render_human()
            };
            print!("{text}");
            if report.failures() == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        // Raw converter output (already printed).
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn run(command: &Command, started: Instant) -> Result<Option<RunReport>> {
    let report = match command {
        Command::Enumerate {
            voters,
            alternatives,
            profiles,
            committees,
        } => cmd_enumerate(*voters, *alternatives, *profiles, *committees)?,
        Command::CheckCsp { file } => cmd_check_csp(file)?,
        Command::CheckCompat { file } => cmd_check_compat(file)?,
        Command::CheckBbm { file } => cmd_check_bbm(file)?,
        Command::EvalPsi { spec, profile } => cmd_eval_psi(spec, profile)?,
        Command::PsiToTable { spec, output } => {
            let Some(report) = cmd_psi_to_table(spec, output.as_deref())? else {
                return Ok(None);
            };
            report
        }
        Command::Decompose { file, pi, output } => cmd_decompose(file, pi.as_deref(), output)?,
        Command::Roundtrip { file } => cmd_roundtrip(file)?,
        Command::VerifyTheorems {
            voters,
            alternatives,
            seed,
        } => cmd_verify_theorems(*voters, *alternatives, *seed)?,
    };
    let mut report = report;
    report.elapsed = started.elapsed();
    Ok(Some(report))
}

/// Cap on listed profiles: the space itself may be valid while a full
/// listing would flood the terminal.
const MAX_LISTED_PROFILES: usize = 10_000;

fn cmd_enumerate(
    voters: usize,
    alternatives: usize,
    profiles: bool,
    committees: bool,
) -> Result<RunReport> {
    let space = ProfileSpace::with_default_labels(voters, alternatives)?;
    let mut report = RunReport::new("enumerate", &space);
    report.counts.push(("orders", space.num_orders() as u64));
    report
        .counts
        .push(("profiles", space.num_profiles() as u64));
    let mut items = Vec::new();
    for (rank, order) in space.orders().iter().enumerate() {
        items.push(format!("{rank}: {}", format_order(order, space.universe())));
    }
    if profiles {
        if space.num_profiles() > MAX_LISTED_PROFILES {
            return Err(Error::resource(format!(
                "listing {} profiles exceeds the {MAX_LISTED_PROFILES}-line cap",
                space.num_profiles()
            )));
        }
        for (idx, p) in space.profiles().enumerate() {
            items.push(format!("P#{idx}: {}", format_profile_inline(&p, &space)));
        }
    }
    if committees {
        let families = enumerate_committees(space.full_set())?;
        report.counts.push(("committees", families.len() as u64));
        for (idx, family) in families.iter().enumerate() {
            items.push(format!(
                "F#{idx}: {}",
                format_committee(family, space.society())
            ));
        }
    }
    report.counts.push(("failures", 0));
    report.items = items;
    Ok(report)
}

fn load_table(path: &Path) -> Result<ScfTable> {
    parse_scf_file(&read_file(path)?)
}

fn pair_label(f: &ScfTable) -> Option<String> {
    let (x, y) = f.range_pair().ok()?;
    let universe = f.space().universe();
    Some(format!("{} {}", universe.label(x), universe.label(y)))
}

fn cmd_check_csp(file: &Path) -> Result<RunReport> {
    let f = load_table(file)?;
    let mut report = RunReport::new("check-csp", f.space());
    report.pair = pair_label(&f);
    report
        .counts
        .push(("profiles", f.space().num_profiles() as u64));
    match csp_witness(&f) {
        Some(w) => {
            report.counts.push(("failures", 1));
            report
                .items
                .push("coalitionally strategy-proof: no".to_string());
            report.witnesses.push(format_csp_witness(&f, &w));
        }
        None => {
            report.counts.push(("failures", 0));
            report
                .items
                .push("coalitionally strategy-proof: yes".to_string());
        }
    }
    Ok(report)
}

fn cmd_check_compat(file: &Path) -> Result<RunReport> {
    let f = load_table(file)?;
    let (x, y) = f.range_pair()?;
    let mut report = RunReport::new("check-compat", f.space());
    report.pair = pair_label(&f);
    report
        .counts
        .push(("profiles", f.space().num_profiles() as u64));
    match compatibility_witness(&f, x, y)? {
        Some((p, q)) => {
            let space = f.space();
            let universe = space.universe();
            report.counts.push(("failures", 1));
            report.items.push("dominance-compatible: no".to_string());
            report.witnesses.push(format!(
                "P#{p}: {} -> {}\nP#{q}: {} -> {}\nP#{p} dominates P#{q} toward '{}' yet the values differ",
                format_profile_inline(&space.profile(p), space),
                universe.label(f.value(p)),
                format_profile_inline(&space.profile(q), space),
                universe.label(f.value(q)),
                universe.label(f.value(p)),
            ));
        }
        None => {
            report.counts.push(("failures", 0));
            report.items.push("dominance-compatible: yes".to_string());
        }
    }
    Ok(report)
}

fn cmd_check_bbm(file: &Path) -> Result<RunReport> {
    let f = load_table(file)?;
    let (x, y) = f.range_pair()?;
    let mut report = RunReport::new("check-bbm", f.space());
    report.pair = pair_label(&f);
    report
        .counts
        .push(("profiles", f.space().num_profiles() as u64));
    match essential_witness(&f, x, y)? {
        Some((p, q, condition)) => {
            let space = f.space();
            let universe = space.universe();
            report.counts.push(("failures", 1));
            report
                .items
                .push("essentially based and monotonic: no".to_string());
            report.witnesses.push(format!(
                "P#{p}: {} -> {}\nP#{q}: {} -> {}\ninclusion condition {condition:?} fires from P#{p} to P#{q}",
                format_profile_inline(&space.profile(p), space),
                universe.label(f.value(p)),
                format_profile_inline(&space.profile(q), space),
                universe.label(f.value(q)),
            ));
        }
        None => {
            report.counts.push(("failures", 0));
            report
                .items
                .push("essentially based and monotonic: yes".to_string());
        }
    }
    Ok(report)
}

fn load_spec(path: &Path) -> Result<PsiSpec> {
    parse_psi_file(&read_file(path)?)
}

fn load_profile_for(space: &ProfileSpace, path: &Path) -> Result<Profile> {
    let (profile_space, profile) = parse_profile_file(&read_file(path)?)?;
    if profile_space != *space {
        return Err(Error::domain(format!(
            "profile file {} names a different universe or society than the spec",
            path.display()
        )));
    }
    Ok(profile)
}

fn cmd_eval_psi(spec_path: &Path, profile_path: &Path) -> Result<RunReport> {
    let spec = load_spec(spec_path)?;
    let profile = load_profile_for(spec.space(), profile_path)?;
    let mut report = RunReport::new("eval-psi", spec.space());
    let (a, b) = spec.pair();
    let universe = spec.space().universe();
    report.pair = Some(format!("{} {}", universe.label(a), universe.label(b)));
    report.counts.push(("entries", spec.num_entries() as u64));
    report.counts.push(("failures", 0));
    let index = spec.index_of(&profile)?;
    let value = spec.evaluate(&profile)?;
    report.items.push(match index {
        EntryIndex::Entry(k) => format!("entry: {k}"),
        EntryIndex::Infinity => "entry: infinity".to_string(),
    });
    report
        .items
        .push(format!("value: {}", universe.label(value)));
    Ok(report)
}

fn cmd_psi_to_table(spec_path: &Path, output: Option<&Path>) -> Result<Option<RunReport>> {
    let spec = load_spec(spec_path)?;
    let table = spec.to_table()?;
    let text = format_scf_file(&table);
    match output {
        None => {
            print!("{text}");
            Ok(None)
        }
        Some(path) => {
            write_file(path, &text)?;
            let mut report = RunReport::new("psi-to-table", spec.space());
            let (a, b) = spec.pair();
            let universe = spec.space().universe();
            report.pair = Some(format!("{} {}", universe.label(a), universe.label(b)));
            report
                .counts
                .push(("profiles", table.space().num_profiles() as u64));
            report.counts.push(("entries", spec.num_entries() as u64));
            report.counts.push(("failures", 0));
            report.items.push(format!("wrote {}", path.display()));
            Ok(Some(report))
        }
    }
}

fn cmd_decompose(file: &Path, pi: Option<&Path>, output: &Path) -> Result<RunReport> {
    let f = load_table(file)?;
    let (x, y) = f.range_pair()?;
    let chosen = match pi {
        Some(path) => Some(load_profile_for(f.space(), path)?),
        None => None,
    };
    let spec = decompose(&f, x, y, chosen.as_ref())?;
    write_file(output, &format_psi_file(&spec))?;
    let mut report = RunReport::new("decompose", f.space());
    report.pair = pair_label(&f);
    report
        .counts
        .push(("profiles", f.space().num_profiles() as u64));
    report.counts.push(("entries", spec.num_entries() as u64));
    report.counts.push(("failures", 0));
    report.items.push(format!("wrote {}", output.display()));
    Ok(report)
}

fn cmd_roundtrip(file: &Path) -> Result<RunReport> {
    let f = load_table(file)?;
    let (x, y) = f.range_pair()?;
    let spec = decompose(&f, x, y, None)?;
    let back = spec.to_table()?;
    let mut report = RunReport::new("roundtrip", f.space());
    report.pair = pair_label(&f);
    report
        .counts
        .push(("profiles", f.space().num_profiles() as u64));
    report.counts.push(("entries", spec.num_entries() as u64));
    let mismatch = f
        .values()
        .iter()
        .zip(back.values())
        .position(|(left, right)| left != right);
    match mismatch {
        Some(idx) => {
            let space = f.space();
            let universe = space.universe();
            report.counts.push(("failures", 1));
            report.items.push("round-trip: mismatch".to_string());
            report.witnesses.push(format!(
                "P#{idx}: {} -> table '{}', decomposition '{}'",
                format_profile_inline(&space.profile(idx), space),
                universe.label(f.value(idx)),
                universe.label(back.value(idx)),
            ));
        }
        None => {
            report.counts.push(("failures", 0));
            report.items.push(format!(
                "round-trip: exact ({} entries)",
                spec.num_entries()
            ));
        }
    }
    Ok(report)
}

fn cmd_verify_theorems(voters: usize, alternatives: usize, seed: u64) -> Result<RunReport> {
    let suite = run_suite(voters, alternatives, seed)?;
    let space = ProfileSpace::with_default_labels(voters, alternatives)?;
    let mut report = RunReport::new("verify-theorems", &space);
    let universe = space.universe();
    report.pair = Some(format!(
        "{} {}",
        universe.label(twoval_core::Alternative(0)),
        universe.label(twoval_core::Alternative(1))
    ));
    report.counts.push(("seed", seed));
    report.counts.push(("checks", suite.checks.len() as u64));
    report.counts.push(("failures", suite.failures() as u64));
    for check in &suite.checks {
        let tag = if check.passed { "PASS" } else { "FAIL" };
        report
            .items
            .push(format!("{tag} {} - {}", check.name, check.details));
    }
    Ok(report)
}
