use std::io::Write;

use super::output::{self, *};
use super::*;
use crate::diagnostics::{
    cdf_paths, chebyshev_bound_nigp, chebyshev_bound_pdp, empirical_order_prob, error_report,
    lemma1_prob, lemma1_prob_mc, nigp_moments, pdp_moments,
};
use crate::measures::{PdpParams, Process, TruncationRule};
use crate::RngStream;

/// Degenerate paths listed individually on stderr before summarizing.
const WARN_LINES: usize = 10;

pub(super) fn execute(command: Command, stderr: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Sample(a) => sample(a, stderr),
        Command::Compare(a) => compare(a, stderr),
        Command::LemmaProb(a) => lemma_prob(a),
        Command::OrderProb(a) => order_prob(a, stderr),
        Command::Moments(a) => moments(a),
    }
}

fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

impl ProcessArgs {
    /// Builds the process with per-process defaults for unset flags.
    pub fn build(&self) -> Result<Process, CliError> {
        let theta = self.theta.unwrap_or(1.0);
        let alpha = self.alpha.unwrap_or(0.5);
        let process = match self.process {
            ProcessKind::DpNew => Process::DpNew { n: self.n.unwrap_or(100), theta },
            ProcessKind::StableNew => Process::StableNew { n: self.n.unwrap_or(100), alpha },
            ProcessKind::PdpNew => Process::PdpNew {
                n: self.n.unwrap_or(100),
                m: self.m.unwrap_or(500),
                params: PdpParams::new(alpha, theta)?,
            },
            ProcessKind::PdpStick => {
                let rule = match self.epsilon {
                    Some(eps) => TruncationRule::epsilon(eps, self.cap)?,
                    None => TruncationRule::fixed(self.n.unwrap_or(100 * 500))?,
                };
                Process::PdpStick { rule, params: PdpParams::new(alpha, theta)? }
            }
            ProcessKind::NigpNew => Process::NigpNew { n: self.n.unwrap_or(50), theta },
            ProcessKind::NigpStick => Process::NigpStick { n: self.n.unwrap_or(50), theta },
        };
        process.validate()?;
        Ok(process)
    }

    fn default_paths(&self) -> usize {
        match self.process {
            ProcessKind::NigpNew | ProcessKind::NigpStick => 500,
            _ => 1000,
        }
    }
}

fn pool(workers: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    let workers = match workers {
        Some(0) => return Err(config("workers must be at least 1")),
        Some(w) => w,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Io(std::io::Error::other(e)))
}

fn emit(bytes: &[u8], out: &Option<std::path::PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, bytes)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn check_grid(grid: &[f64]) -> Result<(), CliError> {
    crate::measures::check_grid(grid).map_err(CliError::from)
}

fn sample(a: SampleArgs, stderr: &mut dyn Write) -> Result<(), CliError> {
    let process = a.process.build()?;
    let paths = a.paths.unwrap_or_else(|| a.process.default_paths());
    if paths == 0 {
        return Err(config("paths must be at least 1"));
    }
    check_grid(&a.grid)?;
    let format = a.run.format.unwrap_or(Format::Csv);
    let pool = pool(a.run.workers)?;
    let cdfs = pool.install(|| cdf_paths(&process, paths, &a.grid, &a.base, a.run.seed, 0))?;

    let degeneracy: Vec<DegeneratePath> = cdfs
        .iter()
        .enumerate()
        .filter_map(|(path_id, p)| {
            p.degeneracy.map(|d| DegeneratePath { path_id, index: d.index, cause: d.cause })
        })
        .collect();
    for d in degeneracy.iter().take(WARN_LINES) {
        writeln!(stderr, "warning: path {} degenerate at weight {} ({:?})", d.path_id, d.index, d.cause)?;
    }
    if !degeneracy.is_empty() {
        writeln!(stderr, "warning: {} of {paths} paths degenerate", degeneracy.len())?;
    }
    let out = SampleOutput {
        config: SampleConfig { process, base: a.base, paths, seed: a.run.seed },
        grid: a.grid,
        degenerate_paths: degeneracy.len(),
        degeneracy,
        paths: cdfs.into_iter().map(|p| p.values).collect(),
    };
    let bytes = match format {
        Format::Csv => output::csv(out.rows(), &["path_id", "x", "F"])?,
        Format::Json => output::json(&out)?,
    };
    emit(&bytes, &a.run.out)
}

fn compare(a: CompareArgs, stderr: &mut dyn Write) -> Result<(), CliError> {
    check_grid(&a.grid)?;
    let base = a.base.validated()?;
    let (n, m, paths) = match a.family {
        Family::Pdp => (a.n.unwrap_or(100), Some(a.m.unwrap_or(500)), a.paths.unwrap_or(1000)),
        Family::Nigp => {
            if a.m.is_some() || a.alphas.is_some() {
                return Err(config("--m and --alphas apply to the pdp family only"));
            }
            (a.n.unwrap_or(50), None, a.paths.unwrap_or(500))
        }
    };
    let stick_n = a.stick_n.unwrap_or(n * m.unwrap_or(1));
    if paths < 2 {
        return Err(config("compare needs at least 2 paths"));
    }
    let thetas = a.thetas.clone().unwrap_or_else(|| match a.family {
        Family::Pdp => vec![1.0, 10.0, 50.0],
        Family::Nigp => vec![1.0],
    });
    // Theta outer, alpha inner.
    let mut cells = Vec::new();
    for &theta in &thetas {
        match a.family {
            Family::Pdp => {
                for &alpha in a.alphas.as_deref().unwrap_or(&[0.1, 0.5, 0.9]) {
                    let params = PdpParams::new(alpha, theta)?;
                    let new = Process::PdpNew { n, m: m.unwrap_or(500), params };
                    let stick = Process::PdpStick { rule: TruncationRule::fixed(stick_n)?, params };
                    cells.push((Some(alpha), theta, new, stick));
                }
            }
            Family::Nigp => {
                cells.push((None, theta, Process::NigpNew { n, theta }, Process::NigpStick { n: stick_n, theta }));
            }
        }
    }
    for (_, _, new, stick) in &cells {
        new.validate()?;
        stick.validate()?;
    }
    let format = a.run.format.unwrap_or(Format::Json);
    let pool = pool(a.run.workers)?;

    let mut out = Vec::with_capacity(cells.len());
    for (k, (alpha, theta, new, stick)) in cells.into_iter().enumerate() {
        let first_stream = (k * paths) as u64;
        let (rn, rs) = pool.install(|| -> Result<_, CliError> {
            Ok((
                error_report(&new, paths, &a.grid, &base, a.run.seed, first_stream)?,
                error_report(&stick, paths, &a.grid, &base, a.run.seed, first_stream)?,
            ))
        })?;
        let degenerate_paths = rn.degenerate_paths + rs.degenerate_paths;
        if degenerate_paths > 0 {
            writeln!(
                stderr,
                "warning: cell alpha={alpha:?} theta={theta}: {degenerate_paths} degenerate paths excluded"
            )?;
        }
        out.push(CompareCell { alpha, theta, new: rn.summary(), stick: rs.summary(), degenerate_paths });
    }
    let report = CompareReport {
        config: CompareConfig { family: a.family, n, m, stick_n, paths, base, grid: a.grid },
        cells: out,
        seed: a.run.seed,
    };
    let bytes = match format {
        Format::Json => output::json(&report)?,
        Format::Csv => output::csv(
            report.cells.iter().flat_map(|c| {
                [("new", &c.new), ("stick", &c.stick)].map(|(method, s)| CompareRow {
                    alpha: c.alpha,
                    theta: c.theta,
                    method: method.to_string(),
                    max_mean_error: s.max_mean_error,
                    max_sd_error: s.max_sd_error,
                    paths: s.paths,
                    degenerate_paths: s.degenerate_paths,
                })
            }),
            &["alpha", "theta", "method", "max_mean_error", "max_sd_error", "paths", "degenerate_paths"],
        )?,
    };
    emit(&bytes, &a.run.out)
}

fn lemma_prob(a: LemmaArgs) -> Result<(), CliError> {
    if a.i.is_empty() || a.alpha.is_empty() || a.theta.is_empty() {
        return Err(config("lemma-prob needs --i, --alpha and --theta"));
    }
    if a.mc_reps == Some(0) {
        return Err(config("mc-reps must be at least 1"));
    }
    let mut triples = Vec::new();
    for &theta in &a.theta {
        for &alpha in &a.alpha {
            PdpParams::new(alpha, theta)?;
            for &i in &a.i {
                if i == 0 {
                    return Err(config("index i must be at least 1"));
                }
                triples.push((i, alpha, theta));
            }
        }
    }
    let mut rows = Vec::with_capacity(triples.len());
    for (k, &(i, alpha, theta)) in triples.iter().enumerate() {
        let prob = lemma1_prob(i, alpha, theta)?;
        let mc = a
            .mc_reps
            .map(|reps| lemma1_prob_mc(i, alpha, theta, reps, &mut RngStream::new(a.run.seed, k as u64)))
            .transpose()?;
        rows.push(LemmaRow { i, alpha, theta, prob, prob_mc: mc.map(|e| e.prob), se: mc.map(|e| e.se) });
    }
    let bytes = match a.run.format.unwrap_or(Format::Csv) {
        Format::Csv => output::csv(&rows, &["i", "alpha", "theta", "prob"])?,
        Format::Json => output::json(&rows)?,
    };
    emit(&bytes, &a.run.out)
}

fn order_prob(a: OrderArgs, stderr: &mut dyn Write) -> Result<(), CliError> {
    let process = a.process.build()?;
    if a.i.is_empty() {
        return Err(config("order-prob needs --i"));
    }
    if a.reps == 0 {
        return Err(config("reps must be at least 1"));
    }
    let base = a.base.validated()?;
    if let Some(len) = process.len() {
        if let Some(&bad) = a.i.iter().find(|&&i| i == 0 || i + 1 > len) {
            return Err(config(format!("index {bad} must satisfy 1 <= i and i + 1 <= {len}")));
        }
    }
    let pool = pool(a.run.workers)?;
    let mut rows = Vec::with_capacity(a.i.len());
    let mut degenerate_paths = 0;
    for &i in &a.i {
        // Every index reuses the same realizations.
        let e = pool.install(|| empirical_order_prob(&process, i, a.reps, &base, a.run.seed, 0))?;
        degenerate_paths = e.degenerate_paths;
        rows.push(OrderRow { i, prob: e.prob });
    }
    if degenerate_paths > 0 {
        writeln!(stderr, "warning: {degenerate_paths} of {} realizations degenerate", a.reps)?;
    }
    let bytes = match a.run.format.unwrap_or(Format::Csv) {
        Format::Csv => output::csv(&rows, &["i", "prob"])?,
        Format::Json => output::json(&OrderReport { process, reps: a.reps, seed: a.run.seed, degenerate_paths, rows })?,
    };
    emit(&bytes, &a.run.out)
}

fn moments(a: MomentsArgs) -> Result<(), CliError> {
    let params = match a.process {
        Family::Pdp => Some(PdpParams::new(a.alpha.unwrap_or(0.0), a.theta)?),
        Family::Nigp => {
            if a.alpha.is_some() {
                return Err(config("--alpha applies to the pdp process only"));
            }
            None
        }
    };
    let eps: Vec<Option<f64>> = match &a.eps {
        Some(list) => list.iter().copied().map(Some).collect(),
        None => vec![None],
    };
    let mut rows = Vec::new();
    for &h_a in &a.h_a {
        for &e in &eps {
            let (m, bound) = match params {
                Some(p) => (pdp_moments(p, h_a)?, e.map(|e| chebyshev_bound_pdp(p, h_a, e)).transpose()?),
                None => (nigp_moments(a.theta, h_a)?, e.map(|e| chebyshev_bound_nigp(a.theta, h_a, e)).transpose()?),
            };
            rows.push(MomentsRow { h_a, mean: m.mean, variance: m.variance, eps: e, bound });
        }
    }
    let bytes = match a.format.unwrap_or(Format::Csv) {
        Format::Csv => output::csv(&rows, &["hA", "mean", "variance"])?,
        Format::Json => output::json(&rows)?,
    };
    emit(&bytes, &a.out)
}
