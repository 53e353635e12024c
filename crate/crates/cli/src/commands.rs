//! The four subcommands, each producing a CSV document.

use nurbs_limit::{
    check_uniform_conditions, fit_loglog_slope, path_dependence_demo, uniform_limit_curve,
    Analysis, LimitCurve,
};
use rayon::prelude::*;

use crate::config::Experiment;
use crate::output::{coord_columns, num, CsvTable};
use crate::{CliError, Result};

/// Sweep rows with `t` below this are left out of the rate fit.
pub const SLOPE_FIT_MIN_T: f64 = 1e2;

/// Curve points at one `t` along the primary path.
pub fn eval(exp: &Experiment, t: f64, us: &[f64]) -> Result<String> {
    require_parameters(us)?;
    let weights = exp.path.normalized_weights_at(t)?;
    let mut table = CsvTable::new();
    table.comment("command: eval");
    table.comment(format!("t: {}", num(t)));
    table.header(std::iter::once("u".to_string()).chain(coord_columns("x", exp.curve.dim())));
    for &u in us {
        let p = exp.curve.eval_nurbs(&weights, u)?;
        table.row(std::iter::once(num(u)).chain(p.coords().iter().map(|&c| num(c))));
    }
    Ok(table.into_string())
}

/// Limit points, using the single uniform formula when its conditions hold.
pub fn limit(exp: &Experiment, us: &[f64]) -> Result<String> {
    require_parameters(us)?;
    let report = check_uniform_conditions(&exp.curve, &exp.path)?;
    let curve = if report.holds {
        uniform_limit_curve(&exp.curve, &exp.path)?
    } else {
        LimitCurve::pointwise(&exp.curve, &exp.path)?
    };
    let mut table = CsvTable::new();
    table.comment("command: limit");
    table.comment(format!("uniform: {}", report.holds));
    if !report.holds {
        table.comment(format!("violated: {report}"));
    }
    table.comment(format!("interior group: {}", curve.interior_group()));
    table.header(
        std::iter::once("u".to_string())
            .chain(coord_columns("x", exp.curve.dim()))
            .chain(["exponent".to_string(), "group".to_string()]),
    );
    for &u in us {
        let lp = curve.evaluate_with_group(u)?;
        table.row(
            std::iter::once(num(u))
                .chain(lp.point.coords().iter().map(|&c| num(c)))
                .chain([num(lp.group.exponent), lp.group.to_string()]),
        );
    }
    Ok(table.into_string())
}

/// Sup and L¹ errors over the schedule, rows computed in parallel.
pub fn sweep(exp: &Experiment) -> Result<String> {
    let analysis = Analysis::new(&exp.curve, &exp.path, exp.settings)?;
    let rows = exp
        .schedule
        .par_iter()
        .map(|&t| analysis.row(t))
        .collect::<Result<Vec<_>, _>>()?;
    let report = analysis.report(rows)?;
    let mut table = CsvTable::new();
    table.comment("command: sweep");
    table.comment(format!("reference: {}", report.reference.name()));
    table.comment(format!("grid_size: {}", report.grid_size));
    table.comment(format!(
        "quadrature: composite gauss-legendre, {} subdivisions x {} nodes",
        report.subdivisions, report.nodes_per_subdivision
    ));
    table.comment(format!("path: {}", report.path_description));
    table.header(["t", "sup_error", "l1_error"]);
    for r in &report.rows {
        table.row([num(r.t), num(r.sup_error), num(r.l1_error)]);
    }
    let tail: Vec<(f64, f64)> = report
        .rows
        .iter()
        .filter(|r| r.t >= SLOPE_FIT_MIN_T)
        .map(|r| (r.t, r.sup_error))
        .collect();
    let slope = fit_loglog_slope(&tail).map_or_else(|| "nan".to_string(), num);
    table.comment(format!(
        "sup_error_slope(t>={}): {slope}",
        num(SLOPE_FIT_MIN_T)
    ));
    Ok(table.into_string())
}

/// Limits along the two configured paths at one interior `u`.
pub fn pathdemo(exp: &Experiment, us: &[f64]) -> Result<String> {
    let path_b = exp.path_b.as_ref().ok_or_else(|| {
        CliError::Invalid("pathdemo needs a second path (path_b) in the config".into())
    })?;
    let u = match us {
        [u] => *u,
        _ => {
            return Err(CliError::Invalid(format!(
                "pathdemo takes exactly one --u value, got {}",
                us.len()
            )))
        }
    };
    let r = path_dependence_demo(&exp.curve, &exp.path, path_b, u)?;
    let dim = exp.curve.dim();
    let mut table = CsvTable::new();
    table.comment("command: pathdemo");
    table.header(
        std::iter::once("u".to_string())
            .chain(coord_columns("a_x", dim))
            .chain(coord_columns("b_x", dim))
            .chain(std::iter::once("separation".to_string())),
    );
    table.row(
        std::iter::once(num(r.u))
            .chain(r.limit_a.coords().iter().map(|&c| num(c)))
            .chain(r.limit_b.coords().iter().map(|&c| num(c)))
            .chain(std::iter::once(num(r.separation))),
    );
    Ok(table.into_string())
}

fn require_parameters(us: &[f64]) -> Result<()> {
    if us.is_empty() {
        return Err(CliError::Invalid("no --u values given".into()));
    }
    Ok(())
}
