use gaussint::exact::{
    factorial, gamma_coeff_double_factorial, gamma_coeff_product, gamma_coeff_recurrence,
    gamma_coeff_via_jet, BigRational, HalfIntValue,
};
use gaussint::fractional::{
    caputo_half_derivative, caputo_prefactor, frac_derivative_power, kth_derivative_reciprocal,
    power_rule_coefficient, regularized_half_derivative_at_zero, rl_asymptotic_limit,
    rl_half_derivative, FracOrder,
};
use gaussint::moments::{
    moment_closed, moment_gamma_form, moment_odd, moment_quadrature, MomentQuery, MomentResult,
};
use gaussint::special::{
    factorial_numeric, gamma_exact, gamma_half_minus, gamma_half_plus, gamma_value,
    hyp2f1_integral, hyp2f1_series, Estimate, Hyp2F1Params,
};
use gaussint::sweep::{moment_oracle_sweep, MomentComparison};
use gaussint::tsallis::{
    density_classical, density_closed, density_terms, occupation_boltzmann_limit,
    occupation_exact, occupation_first_order, tsallis_entropy, MomentRoute, PhysicalConstants,
    ProbabilityVector, SpeciesThermo, UnitSystem,
};
use gaussint::{Error, Result};

use crate::record::{exact_json, OutputRecord};
use crate::{
    CoefPath, Command, DensityRoute, FracCmd, HalfOrderArgs, HalfSign, Hyp2F1Method,
    MomentArgs, MomentMethodArg, SpecialCmd, SpeciesArgs, TableCmd, TsallisCmd, Units,
};

pub(crate) fn execute(command: &Command) -> Result<Vec<OutputRecord>> {
    let records = dispatch(command)?;
    for r in &records {
        check_finite(r)?;
    }
    Ok(records)
}

/// JSON has no NaN or infinity; a non-finite float means the inputs left the
/// range where the result is representable.
fn check_finite(r: &OutputRecord) -> Result<()> {
    fn walk(key: &str, v: &serde_json::Value) -> Result<()> {
        match v {
            serde_json::Value::Null => Err(overflow(key)),
            serde_json::Value::Object(map) => map.iter().try_for_each(|(k, v)| walk(k, v)),
            _ => Ok(()),
        }
    }
    fn overflow(key: &str) -> Error {
        Error::InvalidArgument {
            name: "result field",
            value: key.to_string(),
            reason: "not representable as a finite double for these inputs",
        }
    }
    if !r.value.is_finite() {
        return Err(overflow("value"));
    }
    if !r.error_estimate.is_finite() {
        return Err(overflow("error_estimate"));
    }
    r.extras.iter().try_for_each(|(k, v)| walk(k, v))
}

fn dispatch(command: &Command) -> Result<Vec<OutputRecord>> {
    match command {
        Command::Moment(args) => moment(args).map(|r| vec![r]),
        Command::GammaCoef(args) => {
            let coef = match args.path {
                CoefPath::Product => gamma_coeff_product(args.n),
                CoefPath::Recurrence => gamma_coeff_recurrence(args.n),
                CoefPath::DoubleFactorial => gamma_coeff_double_factorial(args.n),
                CoefPath::Jet => gamma_coeff_via_jet(args.n),
            };
            let exact = HalfIntValue::rational(coef);
            let method = match args.path {
                CoefPath::Product => "product",
                CoefPath::Recurrence => "recurrence",
                CoefPath::DoubleFactorial => "double-factorial",
                CoefPath::Jet => "jet",
            };
            Ok(vec![OutputRecord::new("gamma-coef", method, exact.to_f64())
                .input("n", args.n)
                .exact(&exact)])
        }
        Command::Special(cmd) => special(cmd).map(|r| vec![r]),
        Command::Tsallis(cmd) => tsallis(cmd).map(|r| vec![r]),
        Command::Frac(cmd) => frac(cmd).map(|r| vec![r]),
        Command::Table(cmd) => table(cmd),
    }
}

fn moment_record(command: &str, query: MomentQuery, result: &MomentResult) -> OutputRecord {
    let mut r = OutputRecord::new(command, &result.method.to_string(), result.float_value)
        .input("n", query.n())
        .input("alpha", query.alpha())
        .error(result.error_estimate)
        .extra("alpha_exponent", result.alpha_exponent.to_string());
    if let Some(coef) = &result.exact_coef {
        // coef·√π, still to be multiplied by α^alpha_exponent
        r = r.exact(&HalfIntValue::times_sqrt_pi(coef.clone()));
    }
    r
}

fn moment(args: &MomentArgs) -> Result<OutputRecord> {
    if args.odd {
        let result = moment_odd(args.n, args.alpha)?;
        let r = OutputRecord::new("moment", "closed", 0.0)
            .input("n", args.n)
            .input("alpha", args.alpha)
            .input("odd", true)
            .exact(&HalfIntValue::rational(BigRational::from_integer(0.into())))
            .extra("alpha_exponent", result.alpha_exponent.to_string());
        return Ok(r);
    }
    let query = MomentQuery::new(args.n, args.alpha)?;
    let result = match args.method {
        MomentMethodArg::Closed => moment_closed(query),
        MomentMethodArg::GammaForm => moment_gamma_form(query),
        MomentMethodArg::Quadrature => moment_quadrature(query, args.tol)?,
    };
    let mut r = moment_record("moment", query, &result);
    if args.method == MomentMethodArg::Quadrature {
        r = r.input("tol", args.tol);
    }
    Ok(r)
}

fn estimate_record(command: &str, exact: Option<HalfIntValue>, est: Estimate) -> OutputRecord {
    match exact {
        Some(v) => OutputRecord::new(command, "exact", v.to_f64()).exact(&v),
        None => OutputRecord::new(command, "quadrature", est.value).error(est.error_estimate),
    }
}

fn special(cmd: &SpecialCmd) -> Result<OutputRecord> {
    Ok(match *cmd {
        SpecialCmd::GammaHalf { n, sign } => {
            let (v, s) = match sign {
                HalfSign::Plus => (gamma_half_plus(n), "plus"),
                HalfSign::Minus => (gamma_half_minus(n), "minus"),
            };
            OutputRecord::new("special gamma-half", "exact", v.to_f64())
                .input("n", n)
                .input("sign", s)
                .exact(&v)
        }
        SpecialCmd::Factorial { x, tol } => {
            let exact = if x > -1.0 { gamma_exact(x + 1.0)? } else { None };
            let est = match &exact {
                Some(v) => Estimate::exact(v.to_f64()),
                None => factorial_numeric(x, tol)?,
            };
            estimate_record("special factorial", exact, est).input("x", x)
        }
        SpecialCmd::Gamma { t, tol } => {
            let exact = gamma_exact(t)?;
            let est = gamma_value(t, tol)?;
            estimate_record("special gamma", exact, est).input("t", t)
        }
        SpecialCmd::Hyp2f1 { a, b, c, z, method, tol } => {
            let params = Hyp2F1Params::new(a, b, c, z);
            let (est, tag) = match method {
                Hyp2F1Method::Series => (hyp2f1_series(params, tol)?, "series"),
                Hyp2F1Method::Integral => (hyp2f1_integral(params, tol)?, "integral"),
            };
            OutputRecord::new("special hyp2f1", tag, est.value)
                .input("a", a)
                .input("b", b)
                .input("c", c)
                .input("z", z)
                .input("tol", tol)
                .error(est.error_estimate)
        }
    })
}

fn species(args: &SpeciesArgs) -> Result<SpeciesThermo> {
    SpeciesThermo::new(args.g, args.mass, args.mu, args.temperature, args.q)
}

fn with_species(r: OutputRecord, s: &SpeciesThermo) -> OutputRecord {
    r.input("g", s.g)
        .input("mass", s.mass)
        .input("mu", s.mu)
        .input("temperature", s.temperature)
        .input("q", s.q)
}

/// Decade exponent of `tol`, rounded toward the tighter side.
fn tol_exponent(tol: f64) -> Result<i32> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument {
            name: "tol",
            value: tol.to_string(),
            reason: "tolerance must be positive",
        });
    }
    Ok((tol.log10() + 1e-9).floor() as i32)
}

fn tsallis(cmd: &TsallisCmd) -> Result<OutputRecord> {
    Ok(match cmd {
        TsallisCmd::Entropy { p, q } => {
            let pv = ProbabilityVector::new(p.clone())?;
            OutputRecord::new("tsallis entropy", "closed", tsallis_entropy(&pv, *q))
                .input("p", p.clone())
                .input("q", *q)
                .units("natural")
        }
        TsallisCmd::Occupation { energy, species: args } => {
            let s = species(args)?;
            let exact = occupation_exact(*energy, &s)?;
            with_species(OutputRecord::new("tsallis occupation", "exact", exact), &s)
                .input("energy", *energy)
                .units("natural")
                .extra("first_order", occupation_first_order(*energy, &s))
                .extra("boltzmann_limit", occupation_boltzmann_limit(*energy, &s))
        }
        TsallisCmd::Density { species: args, units, route, tol } => {
            let s = species(args)?;
            let (unit_system, unit_tag) = match units {
                Units::Natural => (UnitSystem::Natural, "natural"),
                Units::Si => (UnitSystem::Si, "si"),
            };
            let constants = PhysicalConstants::for_units(unit_system);
            let (moment_route, route_tag) = match route {
                DensityRoute::Closed => (MomentRoute::Closed, "closed"),
                DensityRoute::Quadrature => (
                    MomentRoute::Quadrature { tol_exponent: tol_exponent(*tol)? },
                    "quadrature",
                ),
            };
            let closed = density_closed(&s, &constants);
            let terms = density_terms(&s, &constants, moment_route)?;
            let integral = terms.total();
            let rel = if closed == integral { 0.0 } else { ((integral - closed) / closed).abs() };
            let mut r = with_species(OutputRecord::new("tsallis density", "closed", closed), &s)
                .input("route", route_tag)
                .units(unit_tag)
                .extra("integral", integral)
                .extra("relative_difference", rel)
                .extra("classical", density_classical(&s, &constants))
                .extra(
                    "terms",
                    serde_json::to_value(terms).expect("plain struct of finite floats"),
                );
            if *route == DensityRoute::Quadrature {
                r = r.input("tol", *tol);
            }
            r
        }
    })
}

fn half_order(args: &HalfOrderArgs) -> u32 {
    args.m.unwrap_or(args.n + 1)
}

fn frac(cmd: &FracCmd) -> Result<OutputRecord> {
    Ok(match cmd {
        FracCmd::Power { theta, alpha, m, t } => {
            let order = match m {
                Some(m) => FracOrder::new(*alpha, *m)?,
                None => FracOrder::canonical(*alpha)?,
            };
            let coef = power_rule_coefficient(*theta, order)?;
            let method = if coef.exact().is_some() { "exact" } else { "quadrature" };
            let mut r = OutputRecord::new("frac power", method, coef.to_f64())
                .input("theta", *theta)
                .input("alpha", *alpha)
                .input("m", order.m())
                .error(coef.error_estimate());
            if let Some(v) = coef.exact() {
                r = r.exact(v);
            }
            if let Some(t) = t {
                r = r.input("t", *t).extra("derivative", frac_derivative_power(*theta, order, *t)?);
            }
            r
        }
        FracCmd::Reciprocal { k } => {
            let v = HalfIntValue::rational(BigRational::from_integer(kth_derivative_reciprocal(*k)));
            let matches = *v.coef() == BigRational::from_integer(factorial(*k as u64));
            OutputRecord::new("frac reciprocal", "jet", v.to_f64())
                .input("k", *k)
                .exact(&v)
                .extra("equals_k_factorial", matches)
        }
        FracCmd::Rl(args) => {
            let m = half_order(args);
            let value = rl_half_derivative(args.n, m, args.x)?;
            let limit = rl_asymptotic_limit(args.n);
            let scaled = value * args.x.powf(args.n as f64 + 0.5);
            half_record("frac rl", args, m, value)
                .extra("asymptotic_limit", exact_json(&limit))
                .extra("asymptotic_limit_value", limit.to_f64())
                .extra("scaled_value", scaled)
                .extra("asymptotic_deviation", ((scaled - limit.to_f64()) / limit.to_f64()).abs())
        }
        FracCmd::Caputo(args) => {
            let m = half_order(args);
            let value = caputo_half_derivative(args.n, m, args.x)?;
            let prefactor = caputo_prefactor(args.n, m)?;
            let scaled = value * args.x.powf(-(m as f64 - args.n as f64 - 0.5));
            half_record("frac caputo", args, m, value)
                .extra("prefactor", exact_json(&prefactor))
                .extra("prefactor_value", prefactor.to_f64())
                .extra("scaled_value", scaled)
                .extra("asymptotic_deviation", ((scaled - prefactor.to_f64()) / prefactor.to_f64()).abs())
        }
        FracCmd::Regularized { n } => {
            let v = regularized_half_derivative_at_zero(*n);
            OutputRecord::new("frac regularized", "exact", v.to_f64())
                .input("n", *n)
                .exact(&v)
        }
    })
}

fn half_record(command: &str, args: &HalfOrderArgs, m: u32, value: f64) -> OutputRecord {
    let regularized = regularized_half_derivative_at_zero(args.n);
    OutputRecord::new(command, "series", value)
        .input("n", args.n)
        .input("m", m)
        .input("x", args.x)
        .extra("regularized", exact_json(&regularized))
        .extra("regularized_value", regularized.to_f64())
}

fn comparison_record(c: &MomentComparison, tol: f64) -> OutputRecord {
    moment_record("table", c.query, &c.closed)
        .input("tol", tol)
        .extra("quadrature", c.quadrature.float_value)
        .extra("quadrature_error_estimate", c.quadrature.error_estimate)
        .extra("relative_difference", c.relative_difference())
}

fn table(cmd: &TableCmd) -> Result<Vec<OutputRecord>> {
    let (queries, tol) = match *cmd {
        TableCmd::N { max, alpha, tol } => (
            (0..=max).map(|n| MomentQuery::new(n, alpha)).collect::<Result<Vec<_>>>()?,
            tol,
        ),
        TableCmd::Alpha { n, from, to, steps, tol } => {
            if steps == 0 {
                return Err(Error::InvalidArgument {
                    name: "steps",
                    value: "0".into(),
                    reason: "need at least one grid point",
                });
            }
            let alphas: Vec<f64> = if steps == 1 {
                vec![from]
            } else {
                (0..steps)
                    .map(|i| from + (to - from) * i as f64 / (steps - 1) as f64)
                    .collect()
            };
            (
                alphas.into_iter().map(|a| MomentQuery::new(n, a)).collect::<Result<Vec<_>>>()?,
                tol,
            )
        }
    };
    Ok(moment_oracle_sweep(&queries, tol)?
        .iter()
        .map(|c| comparison_record(c, tol))
        .collect())
}
