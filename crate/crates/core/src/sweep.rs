//! Batch evaluation over parameter grids.
//!
//! Every routine in this crate is a pure function of its inputs, so sweeps
//! map independently over their grid points. With the `parallel` feature
//! (on by default) [`map`] fans out over rayon's pool; without it, or via
//! [`map_sequential`], points are evaluated in order. Results always come
//! back in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::moments::{moment_closed, moment_quadrature, MomentQuery, MomentResult};
use crate::tsallis::{density_closed, density_integral, MomentRoute, PhysicalConstants, SpeciesThermo};
use crate::Result;

pub fn map_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_parallel<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_parallel(items, f)
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_sequential(items, f)
}

/// Closed form and quadrature side by side for one grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentComparison {
    pub query: MomentQuery,
    pub closed: MomentResult,
    pub quadrature: MomentResult,
}

impl MomentComparison {
    pub fn relative_difference(&self) -> f64 {
        ((self.quadrature.float_value - self.closed.float_value) / self.closed.float_value).abs()
    }
}

fn compare_one(query: &MomentQuery, tol: f64) -> Result<MomentComparison> {
    Ok(MomentComparison {
        query: *query,
        closed: moment_closed(*query),
        quadrature: moment_quadrature(*query, tol)?,
    })
}

/// Evaluates every query by closed form and by quadrature.
pub fn moment_oracle_sweep(queries: &[MomentQuery], tol: f64) -> Result<Vec<MomentComparison>> {
    map(queries, |q| compare_one(q, tol)).into_iter().collect()
}

pub fn moment_oracle_sweep_sequential(
    queries: &[MomentQuery],
    tol: f64,
) -> Result<Vec<MomentComparison>> {
    map_sequential(queries, |q| compare_one(q, tol))
        .into_iter()
        .collect()
}

/// `(closed, integral)` number densities for each state.
pub fn density_sweep(
    states: &[SpeciesThermo],
    constants: &PhysicalConstants,
    route: MomentRoute,
) -> Result<Vec<(f64, f64)>> {
    map(states, |s| Ok((density_closed(s, constants), density_integral(s, constants, route)?)))
        .into_iter()
        .collect()
}
