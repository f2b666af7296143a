//! Shared resolution of (family, d, parameter flags) into weight vectors and
//! states.

use belldiag::bell::{fam_g_state, fam_state};
use belldiag::{DensityMatrix64, FamGWeights64, FamWeights64};
use clap::ValueEnum;

use crate::records::ParamsJson;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Weights λ_1..λ_d over the shifted diagonal projectors and P⁺
    Fam,
    /// Weights λ_0..λ_d, adding the unshifted diagonal projector
    Famg,
    /// One-parameter generalization of the d=3 bound-entanglement family
    Horodecki,
    /// One-parameter family pinned to the PPT boundary
    Epsilon,
    /// Mixture of the maximally mixed state and P⁺
    Isotropic,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Fam => "fam",
            Family::Famg => "famg",
            Family::Horodecki => "horodecki",
            Family::Epsilon => "epsilon",
            Family::Isotropic => "isotropic",
        }
    }
}

/// Raw parameter flags as given on the command line.
#[derive(Debug, Clone, Default)]
pub struct FamilyParams {
    pub lambdas: Option<Vec<f64>>,
    pub alpha: Option<f64>,
    pub epsilon: Option<f64>,
    pub lambda_d: Option<f64>,
}

/// Weights resolved from the command line; the two variants carry the two
/// classifier entry points.
#[derive(Debug, Clone)]
pub enum ResolvedWeights {
    Plain(FamWeights64),
    Extended(FamGWeights64),
}

impl ResolvedWeights {
    pub fn state(&self) -> DensityMatrix64 {
        match self {
            ResolvedWeights::Plain(w) => fam_state(w),
            ResolvedWeights::Extended(w) => fam_g_state(w),
        }
    }

    pub fn classify(&self) -> belldiag::Verdict64 {
        match self {
            ResolvedWeights::Plain(w) => belldiag::classify::classify_fam(w),
            ResolvedWeights::Extended(w) => belldiag::classify::classify_famg(w),
        }
    }

    pub fn as_extended(&self) -> FamGWeights64 {
        match self {
            ResolvedWeights::Plain(w) => w.clone().into(),
            ResolvedWeights::Extended(w) => w.clone(),
        }
    }
}

fn reject_unused(family: Family, params: &FamilyParams, used: &str) -> Result<(), CliError> {
    let mut stray = Vec::new();
    if params.lambdas.is_some() && used != "--lambdas" {
        stray.push("--lambdas");
    }
    if params.alpha.is_some() && used != "--alpha" {
        stray.push("--alpha");
    }
    if params.epsilon.is_some() && used != "--epsilon" {
        stray.push("--epsilon");
    }
    if params.lambda_d.is_some() && used != "--lambda-d" {
        stray.push("--lambda-d");
    }
    if stray.is_empty() {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "{} are not parameters of the {} family (it takes {used})",
            stray.join(", "),
            family.name()
        )))
    }
}

/// Resolve the family/parameter combination, rejecting missing or stray
/// flags with a usage error.
pub fn resolve(family: Family, d: usize, params: &FamilyParams) -> Result<ResolvedWeights, CliError> {
    match family {
        Family::Fam => {
            reject_unused(family, params, "--lambdas")?;
            let lambdas = params
                .lambdas
                .clone()
                .ok_or_else(|| CliError::Usage("the fam family requires --lambdas l1,...,ld".into()))?;
            Ok(ResolvedWeights::Plain(FamWeights64::new(d, lambdas)?))
        }
        Family::Famg => {
            reject_unused(family, params, "--lambdas")?;
            let lambdas = params
                .lambdas
                .clone()
                .ok_or_else(|| CliError::Usage("the famg family requires --lambdas l0,...,ld".into()))?;
            Ok(ResolvedWeights::Extended(FamGWeights64::new(d, lambdas)?))
        }
        Family::Horodecki => {
            reject_unused(family, params, "--alpha")?;
            let alpha = params
                .alpha
                .ok_or_else(|| CliError::Usage("the horodecki family requires --alpha".into()))?;
            Ok(ResolvedWeights::Plain(belldiag::bell::horodecki_family(d, alpha)?))
        }
        Family::Epsilon => {
            reject_unused(family, params, "--epsilon")?;
            let epsilon = params
                .epsilon
                .ok_or_else(|| CliError::Usage("the epsilon family requires --epsilon".into()))?;
            Ok(ResolvedWeights::Plain(belldiag::bell::epsilon_family(d, epsilon)?))
        }
        Family::Isotropic => {
            reject_unused(family, params, "--lambda-d")?;
            let lambda_d = params
                .lambda_d
                .ok_or_else(|| CliError::Usage("the isotropic family requires --lambda-d".into()))?;
            Ok(ResolvedWeights::Extended(FamGWeights64::isotropic(d, lambda_d)?))
        }
    }
}

/// The swept parameter of each family: its own scalar where it has one, and
/// λ_d with the remaining weight spread uniformly for fam/famg.
pub fn resolve_sweep_point(family: Family, d: usize, t: f64) -> Result<ResolvedWeights, CliError> {
    let params = match family {
        Family::Fam => {
            if !(0.0..=1.0).contains(&t) {
                return Err(CliError::Usage(format!("sweep value {t} outside [0, 1] for fam")));
            }
            let mut lambdas = vec![(1.0 - t) / (d as f64 - 1.0); d - 1];
            lambdas.push(t);
            FamilyParams { lambdas: Some(lambdas), ..Default::default() }
        }
        Family::Famg => {
            if !(0.0..=1.0).contains(&t) {
                return Err(CliError::Usage(format!("sweep value {t} outside [0, 1] for famg")));
            }
            let mut lambdas = vec![(1.0 - t) / d as f64; d];
            lambdas.push(t);
            FamilyParams { lambdas: Some(lambdas), ..Default::default() }
        }
        Family::Horodecki => FamilyParams { alpha: Some(t), ..Default::default() },
        Family::Epsilon => FamilyParams { epsilon: Some(t), ..Default::default() },
        Family::Isotropic => FamilyParams { lambda_d: Some(t), ..Default::default() },
    };
    resolve(family, d, &params)
}

/// Echo of the resolved parameters for the output records.
pub fn params_json(family: Family, params: &FamilyParams) -> ParamsJson {
    match family {
        Family::Fam | Family::Famg => ParamsJson { lambdas: params.lambdas.clone(), ..Default::default() },
        Family::Horodecki => ParamsJson { alpha: params.alpha, ..Default::default() },
        Family::Epsilon => ParamsJson { epsilon: params.epsilon, ..Default::default() },
        Family::Isotropic => ParamsJson { lambda_d: params.lambda_d, ..Default::default() },
    }
}
