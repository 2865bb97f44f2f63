use clap::{Args, Parser, Subcommand, ValueEnum};
use dspec_core::ds::Context;
use dspec_core::graph::Validation;
use dspec_core::sweep::SweepKind;
use dspec_core::FamilySpec;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "dspec", version, about = "Distance spectra of small connected graphs")]
pub struct Cli {
    /// Suppress the summary on standard error.
    #[arg(long, global = true)]
    pub quiet: bool,

    /// Numeric tolerance (Jacobi convergence for `spectrum`, comparison
    /// tolerance for `tables`).
    #[arg(long, global = true, value_name = "FLOAT")]
    pub tol: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family member.
    Family {
        #[command(flatten)]
        member: Member,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Exact distance characteristic polynomial.
    Charpoly {
        #[command(flatten)]
        input: Input,
    },
    /// Distance eigenvalues by Jacobi rotation.
    Spectrum {
        #[command(flatten)]
        input: Input,
    },
    /// Closed-form polynomials against computed ones over a parameter sweep.
    VerifyClosedForm {
        #[arg(long, value_enum)]
        kind: SweepArg,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Sign checkpoints, root brackets and eigenvalue claims, for one member
    /// or a sweep when no parameters are given.
    SignCheck {
        #[command(flatten)]
        member: Member,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Exhaustive search for distance-cospectral mates.
    DsCheck {
        #[command(flatten)]
        member: Member,
        /// Without --kind, check every family member up to this order.
        #[arg(long)]
        n_max: Option<usize>,
        #[command(flatten)]
        stream: Stream,
        /// Scan on one thread.
        #[arg(long)]
        serial: bool,
    },
    /// Group connected graphs by exact polynomial.
    Census {
        #[arg(long, conflicts_with = "graph6")]
        n: Option<usize>,
        #[command(flatten)]
        stream: Stream,
        #[arg(long)]
        serial: bool,
    },
    /// Forbidden induced subgraphs.
    Forbidden {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "all", value_parser = parse_context)]
        context: Context,
    },
    /// Fixture spectra and proof values against their printed values.
    Tables,
    /// List the fixture catalog, or show one fixture.
    Fixtures {
        #[arg(long)]
        name: Option<String>,
    },
}

fn parse_context(s: &str) -> Result<Context, String> {
    s.parse().map_err(|e: dspec_core::Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Kh,
    KstBridge,
    KstGlued,
    Friendship,
    Complete,
    Path,
    Cycle,
    Star,
    Multipartite,
    Cone,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepArg {
    Kh,
    KstBridge,
    KstGlued,
    Friendship,
    Cone,
}

impl From<SweepArg> for SweepKind {
    fn from(k: SweepArg) -> Self {
        match k {
            SweepArg::Kh => SweepKind::Kh,
            SweepArg::KstBridge => SweepKind::KstBridge,
            SweepArg::KstGlued => SweepKind::KstGlued,
            SweepArg::Friendship => SweepKind::Friendship,
            SweepArg::Cone => SweepKind::Cone,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Member {
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub h: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Part sizes for multipartite and cone kinds.
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
    /// Accept degenerate parameters such as `h = 2`.
    #[arg(long)]
    pub relaxed: bool,
}

impl Member {
    pub fn validation(&self) -> Validation {
        if self.relaxed {
            Validation::Relaxed
        } else {
            Validation::Strict
        }
    }

    pub fn any_param(&self) -> bool {
        self.n.is_some()
            || self.h.is_some()
            || self.s.is_some()
            || self.t.is_some()
            || self.k.is_some()
            || self.parts.is_some()
    }

    /// The family member named by the flags, `None` without `--kind`.
    pub fn spec(&self) -> Result<Option<FamilySpec>, String> {
        let Some(kind) = self.kind else {
            return if self.any_param() {
                Err("family parameters given without --kind".into())
            } else {
                Ok(None)
            };
        };
        let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| format!("this --kind requires --{flag}"));
        let parts = || {
            self.parts
                .clone()
                .ok_or_else(|| "this --kind requires --parts".to_string())
        };
        let spec = match kind {
            Kind::Kh => FamilySpec::Kh {
                n: need(self.n, "n")?,
                h: need(self.h, "h")?,
            },
            Kind::KstBridge => FamilySpec::KstBridge {
                s: need(self.s, "s")?,
                t: need(self.t, "t")?,
            },
            Kind::KstGlued => FamilySpec::KstGlued {
                s: need(self.s, "s")?,
                t: need(self.t, "t")?,
            },
            Kind::Friendship => FamilySpec::Friendship { k: need(self.k, "k")? },
            Kind::Complete => FamilySpec::Complete { n: need(self.n, "n")? },
            Kind::Path => FamilySpec::Path { n: need(self.n, "n")? },
            Kind::Cycle => FamilySpec::Cycle { n: need(self.n, "n")? },
            Kind::Star => FamilySpec::Star { n: need(self.n, "n")? },
            Kind::Multipartite => FamilySpec::CompleteMultipartite { parts: parts()? },
            Kind::Cone => FamilySpec::CliqueCone { parts: parts()? },
        };
        spec.validate(self.validation()).map_err(|e| e.to_string())?;
        Ok(Some(spec))
    }

    /// The sweep that a parameterless `--kind` stands for.
    pub fn sweep_kind(&self) -> Result<SweepKind, String> {
        match self.kind {
            Some(Kind::Kh) => Ok(SweepKind::Kh),
            Some(Kind::KstBridge) => Ok(SweepKind::KstBridge),
            Some(Kind::KstGlued) => Ok(SweepKind::KstGlued),
            Some(Kind::Friendship) => Ok(SweepKind::Friendship),
            Some(_) => Err("sweeps exist only for kh, kst-bridge, kst-glued and friendship".into()),
            None => Err("--kind is required".into()),
        }
    }
}

/// A graph6 file, `-` for standard input.
#[derive(Debug, Clone, Args)]
pub struct Stream {
    #[arg(long, value_name = "FILE")]
    pub graph6: Option<PathBuf>,
    /// Skip malformed graph6 lines instead of failing.
    #[arg(long)]
    pub lenient: bool,
}

/// One source of graphs or distance matrices.
#[derive(Debug, Clone, Args)]
pub struct Input {
    #[command(flatten)]
    pub member: Member,
    #[command(flatten)]
    pub stream: Stream,
    /// A catalog fixture such as `H7`, `D1` or `param_abc(3,3,3)`.
    #[arg(long)]
    pub fixture: Option<String>,
}
