use clap::Args;
use parry_core::{
    parry_substitution, quadratic_substitution, Error, QuadraticParams, RenyiExpansion, Result,
    Substitution,
};

/// Either `--a/--b` or `--digits`.
#[derive(Args, Debug, Clone, Default)]
pub struct SourceArgs {
    /// Parameter a of φ(0) = 0^a 1
    #[arg(long, requires = "b", conflicts_with = "digits")]
    pub a: Option<u32>,
    /// Parameter b of φ(1) = 0^b 1
    #[arg(long, requires = "a", conflicts_with = "digits")]
    pub b: Option<u32>,
    /// Rényi expansion of unity: preperiod then parenthesized period, e.g. "2 1 (1)"
    #[arg(long)]
    pub digits: Option<String>,
}

#[derive(Debug, Clone)]
pub enum Source {
    Quadratic(QuadraticParams),
    Expansion(RenyiExpansion),
}

impl SourceArgs {
    pub fn is_given(&self) -> bool {
        self.a.is_some() || self.digits.is_some()
    }

    pub fn resolve(&self) -> Result<Source> {
        match (self.a, self.b, &self.digits) {
            (Some(a), Some(b), None) => Ok(Source::Quadratic(QuadraticParams::new(a, b)?)),
            (None, None, Some(d)) => Ok(Source::Expansion(d.parse()?)),
            _ => Err(Error::InvalidInput(
                "give either --a and --b, or --digits".into(),
            )),
        }
    }
}

impl Source {
    pub fn substitution(&self) -> Result<Substitution> {
        match self {
            Source::Quadratic(p) => Ok(quadratic_substitution(*p)),
            Source::Expansion(r) => parry_substitution(r),
        }
    }

    pub fn renyi(&self) -> RenyiExpansion {
        match self {
            Source::Quadratic(p) => RenyiExpansion::quadratic(*p),
            Source::Expansion(r) => r.clone(),
        }
    }

    /// Quadratic parameters when the substitution itself is the quadratic one.
    pub fn quadratic(&self) -> Option<QuadraticParams> {
        match self {
            Source::Quadratic(p) => Some(*p),
            Source::Expansion(r) => parry_substitution(r).ok()?.quadratic_params(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Source::Quadratic(p) => format!("a={} b={}", p.a(), p.b()),
            Source::Expansion(r) => format!("digits {r}"),
        }
    }
}
