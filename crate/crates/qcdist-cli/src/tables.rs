//! Table generators for the `table` subcommand. Grid sweeps fan out to
//! QCDIST_THREADS worker threads when that variable is set above 1; rows
//! come back in grid order either way.

use crate::output::Cell;
use qcdist::bounds::{
    euclidean_displacement_bound, hyperbolic_displacement_bound, krzyz_c1, krzyz_c1_sandwich,
    planar_main_bound_log, DilatationK,
};
use qcdist::capacity::{lambda_k, Dimension};
use qcdist::mn::{iterate_a_default, MnParams};
use qcdist::{Error, GridSpec};

fn worker_count() -> usize {
    std::env::var("QCDIST_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}

/// Applies `f` to every point, in parallel when QCDIST_THREADS > 1; the
/// result order follows the input order regardless of scheduling.
fn map_ordered<F>(points: &[f64], f: F) -> Vec<Vec<Cell>>
where
    F: Fn(f64) -> Vec<Cell> + Sync,
{
    let workers = worker_count().min(points.len().max(1));
    if workers <= 1 {
        return points.iter().map(|&x| f(x)).collect();
    }
    let mut rows: Vec<Option<Vec<Cell>>> = vec![None; points.len()];
    let chunk = points.len().div_ceil(workers);
    std::thread::scope(|scope| {
        for (slot_chunk, point_chunk) in rows.chunks_mut(chunk).zip(points.chunks(chunk)) {
            let f = &f;
            scope.spawn(move || {
                for (slot, &x) in slot_chunk.iter_mut().zip(point_chunk) {
                    *slot = Some(f(x));
                }
            });
        }
    });
    rows.into_iter()
        .map(|r| r.expect("all slots filled"))
        .collect()
}

/// K, c1, and the elementary sandwich around it.
pub fn c1_table(grid: &GridSpec) -> (Vec<String>, Vec<Vec<Cell>>) {
    let header = ["K", "c1", "c1_lower", "c1_upper"]
        .map(String::from)
        .to_vec();
    let rows = map_ordered(&grid.points(), |kv| {
        let k = DilatationK::new(kv.max(1.0)).expect("grid in domain");
        let (lo, hi) = krzyz_c1_sandwich(k);
        vec![
            Cell::Num(kv),
            Cell::Num(krzyz_c1(k)),
            Cell::Num(lo),
            Cell::Num(hi),
        ]
    });
    (header, rows)
}

/// K, eta_{K,2}(1), the hyperbolic main bound (planar exact and the n >= 3
/// certified upper), and the linearized Euclidean bounds. Cells outside a
/// bound's proven window stay empty.
pub fn bounds_table(
    grid: &GridSpec,
    dim: Dimension,
) -> Result<(Vec<String>, Vec<Vec<Cell>>), Error> {
    let header = [
        "K",
        "eta_K2_1",
        "main_bound_n2",
        "main_bound_n3_upper",
        "eq12_nine_halves",
        "eq13_planar_b",
        "mycor_best",
        "chain_tanh",
    ]
    .map(String::from)
    .to_vec();
    let n3 = Dimension::new(3).expect("3 >= 2");
    let rows = map_ordered(&grid.points(), |kv| {
        let k = DilatationK::new(kv.max(1.0)).expect("grid clamps at 1");
        let n3_upper = hyperbolic_displacement_bound(k, n3).upper();
        let mycor = euclidean_displacement_bound(k, dim).ok();
        vec![
            Cell::Num(kv),
            Cell::Num(lambda_k(kv.max(1.0)).expect("K >= 1")),
            Cell::Num(planar_main_bound_log(k)),
            Cell::Num(n3_upper),
            match mycor.as_ref().and_then(|b| b.linearized_any_dim) {
                Some(v) => Cell::Num(v),
                None => Cell::Empty,
            },
            match mycor.as_ref().and_then(|b| b.linearized_planar) {
                Some(v) => Cell::Num(v),
                None => Cell::Empty,
            },
            match mycor.as_ref() {
                Some(b) => Cell::Num(b.value),
                None => Cell::Empty,
            },
            match mycor.as_ref() {
                Some(b) => Cell::Num(b.chain_tanh),
                None => Cell::Empty,
            },
        ]
    });
    Ok((header, rows))
}

/// k, a_k rows of the fixed-point iteration for k = 0..=36.
pub fn mn_table(params: MnParams) -> Result<(Vec<String>, Vec<Vec<Cell>>), Error> {
    let trace = iterate_a_default(params)?;
    let header = ["k", "a_k"].map(String::from).to_vec();
    let rows = trace
        .sequence
        .iter()
        .take(37)
        .enumerate()
        .map(|(i, &a)| vec![Cell::Num(i as f64), Cell::Num(a)])
        .collect();
    Ok((header, rows))
}
