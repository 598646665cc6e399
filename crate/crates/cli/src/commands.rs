use std::fs::{self, File};
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use dqwalk::analysis::{moments, Mode, SweepEntry};
use dqwalk::output::{format_f64, write_distribution, write_sweep};
use dqwalk::verify::{self, Depth, VerifyOptions};
use dqwalk::{
    build_line_with_loops, check_unitary_realizable, classical_distribution, evolve, evolve_reduced,
    interval_bounds, parse_edge_list, position_distribution, render_edge_list, tail_mass, LineWithLoopsSpec,
    PairingMode, PositionDistribution, SweepSpec, WalkConfig,
};

use crate::{DepthArg, Failure, GraphArgs, ModeArg, PairingArg, RealizableArgs, RunArgs, SweepArgs, VerifyArgs};

fn mode_of(m: ModeArg) -> Mode {
    match m {
        ModeArg::Quantum => Mode::Quantum,
        ModeArg::Classical => Mode::Classical,
        ModeArg::Reduced => Mode::Reduced,
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn validate_run(args: &RunArgs) -> Result<Option<u64>, Failure> {
    if args.n == 0 {
        return Err(usage("--n must be >= 1"));
    }
    if args.loop_length == 0 {
        return Err(usage("--loop-length must be >= 1"));
    }
    if args.loop_length > 1 && args.mode != ModeArg::Quantum {
        return Err(usage("--loop-length > 1 requires --mode quantum"));
    }
    if args.mode == ModeArg::Reduced && args.n < 2 {
        return Err(usage("--mode reduced requires --n >= 2"));
    }
    match (args.pairing, args.seed) {
        (PairingArg::Random, None) => Err(usage("--pairing random requires --seed")),
        (PairingArg::Random, Some(_)) if args.mode != ModeArg::Quantum => {
            Err(usage("--pairing random requires --mode quantum"))
        }
        (PairingArg::Natural, Some(_)) => Err(usage("--seed only applies to --pairing random")),
        (PairingArg::Natural, None) if args.rerandomize => Err(usage("--rerandomize requires --pairing random")),
        (_, seed) => Ok(seed),
    }
}

fn create(dir: &Path, name: &str) -> Result<BufWriter<File>, Failure> {
    fs::create_dir_all(dir)?;
    Ok(BufWriter::new(File::create(dir.join(name))?))
}

fn stats_line(mode: Mode, n: usize, t: usize, dist: &PositionDistribution) -> String {
    let (mean, variance) = moments(dist);
    let mut line = format!("mean={} variance={}", format_f64(mean), format_f64(variance));
    if mode != Mode::Classical {
        if let Ok(b) = interval_bounds(n, t) {
            line.push_str(&format!(
                " interval_lo={} interval_hi={} tail_mass={}",
                format_f64(b.lo),
                format_f64(b.hi),
                format_f64(tail_mass(dist, &b))
            ));
        }
    }
    line
}

pub fn run(args: RunArgs) -> Result<ExitCode, Failure> {
    let seed = validate_run(&args)?;
    let mode = mode_of(args.mode);
    let (n, t) = (args.n, args.t);
    let dist = match mode {
        Mode::Classical => classical_distribution(n, t)?,
        Mode::Reduced => evolve_reduced(n, t)?.distribution(),
        Mode::Quantum => {
            let pairing = seed.map_or(PairingMode::Natural, |seed| PairingMode::Random { seed });
            let cfg = WalkConfig::new(n, t)
                .with_pairing(pairing)
                .with_loop_length(args.loop_length)
                .with_rerandomize(args.rerandomize);
            position_distribution(&evolve(&cfg)?)
        }
    };
    let stats = stats_line(mode, n, t, &dist);
    match &args.out {
        Some(dir) => {
            let mut name = format!("{mode}_n{n}_t{t}");
            if let Some(s) = seed {
                name.push_str(&format!("_seed{s}"));
            }
            if args.rerandomize {
                name.push_str("_rerandomized");
            }
            if args.loop_length > 1 {
                name.push_str(&format!("_L{}", args.loop_length));
            }
            name.push_str(".csv");
            write_distribution(create(dir, &name)?, &dist)?;
            println!("{stats}");
        }
        None => {
            write_distribution(io::stdout().lock(), &dist)?;
            eprintln!("{stats}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn distribution_name(e: &SweepEntry) -> String {
    let r = &e.record;
    match r.seed {
        Some(s) => format!("{}_n{}_t{}_seed{s}.csv", r.mode, r.n, r.t),
        None => format!("{}_n{}_t{}.csv", r.mode, r.n, r.t),
    }
}

pub fn sweep(args: SweepArgs) -> Result<ExitCode, Failure> {
    let n_list = args.n_list.unwrap_or_else(|| (2..=32).collect());
    if n_list.is_empty() {
        return Err(usage("--n needs at least one value"));
    }
    if n_list.contains(&0) {
        return Err(usage("--n values must be >= 1"));
    }
    if args.modes.is_empty() {
        return Err(usage("--modes needs at least one value"));
    }
    let modes: Vec<Mode> = args.modes.iter().copied().map(mode_of).collect();
    if modes.contains(&Mode::Reduced) && n_list.contains(&1) {
        return Err(usage("mode reduced requires every n >= 2"));
    }
    let mut spec = SweepSpec::new(n_list, args.t, modes).with_loop_length(args.loop_length);
    spec.full_limit = args.full_limit;
    match args.pairing {
        PairingArg::Random if args.seeds.is_empty() => return Err(usage("--pairing random requires --seeds")),
        PairingArg::Random => spec = spec.with_random_pairing(args.seeds),
        PairingArg::Natural if !args.seeds.is_empty() => {
            return Err(usage("--seeds only applies to --pairing random"))
        }
        PairingArg::Natural => {}
    }
    if spec.loop_length == 0 {
        return Err(usage("--loop-length must be >= 1"));
    }
    if spec.loop_length > 1 && spec.modes.iter().any(|m| *m != Mode::Quantum) {
        return Err(usage("--loop-length > 1 requires --modes quantum"));
    }

    let entries = dqwalk::sweep(&spec)?;
    let records = entries.iter().map(|e| &e.record);
    match &args.out {
        Some(dir) => {
            write_sweep(create(dir, "sweep.csv")?, records)?;
            let dist_dir = dir.join("distributions");
            for e in &entries {
                write_distribution(create(&dist_dir, &distribution_name(e))?, &e.distribution)?;
            }
            println!("wrote {} records to {}", entries.len(), dir.join("sweep.csv").display());
        }
        None => write_sweep(io::stdout().lock(), records)?,
    }
    Ok(ExitCode::SUCCESS)
}

pub fn verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    let depth = match args.depth {
        DepthArg::Quick => Depth::Quick,
        DepthArg::Full => Depth::Full,
    };
    let report = verify::run(&VerifyOptions::new(depth))?;
    for check in &report.checks {
        println!("{check}");
    }
    if report.passed() {
        println!("all {} checks passed", report.checks.len());
        Ok(ExitCode::SUCCESS)
    } else {
        let failed = report.checks.iter().filter(|c| !c.passed()).count();
        println!("{failed} of {} checks failed", report.checks.len());
        Ok(ExitCode::from(1))
    }
}

pub fn realizable(args: RealizableArgs) -> Result<ExitCode, Failure> {
    let mut text = String::new();
    if args.input.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(&args.input)?;
    }
    let graph = parse_edge_list(&text)?;
    let report = check_unitary_realizable(&graph);
    let mut out = io::stdout().lock();
    writeln!(out, "vertices={} edges={}", graph.vertex_count(), graph.edges().len())?;
    for v in &report.violations {
        writeln!(out, "unbalanced vertex {}: in={} out={}", v.vertex, v.in_degree, v.out_degree)?;
    }
    if report.is_realizable() {
        writeln!(out, "realizable")?;
        Ok(ExitCode::SUCCESS)
    } else {
        writeln!(out, "not realizable: {} unbalanced vertices", report.violations.len())?;
        Ok(ExitCode::from(1))
    }
}

pub fn graph(args: GraphArgs) -> Result<ExitCode, Failure> {
    let spec = LineWithLoopsSpec::new(args.n, args.x_max, args.loop_length).map_err(|e| usage(e.to_string()))?;
    let g = build_line_with_loops(spec)?;
    io::stdout().lock().write_all(render_edge_list(&g).as_bytes())?;
    Ok(ExitCode::SUCCESS)
}
