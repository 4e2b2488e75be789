use thin_graph::Graph;

use crate::BoundsError;

pub const MAX_PEAK_N: usize = 20;

/// `max_s min_{|X| = s} |N(X) \ X|` over all vertex sets `X`.
pub fn iso_peak(g: &Graph) -> Result<usize, BoundsError> {
    let n = g.n();
    if n > MAX_PEAK_N {
        return Err(BoundsError::TooLarge { n, limit: MAX_PEAK_N });
    }
    let nb: Vec<u32> = (0..n).map(|v| g.mask(v) as u32).collect();
    let mut reach = vec![0u32; 1 << n];
    let mut least = vec![usize::MAX; n + 1];
    least[0] = 0;
    for x in 1u32..1 << n {
        let low = x.trailing_zeros() as usize;
        reach[x as usize] = reach[(x & (x - 1)) as usize] | nb[low];
        let size = x.count_ones() as usize;
        let border = (reach[x as usize] & !x).count_ones() as usize;
        least[size] = least[size].min(border);
    }
    Ok(least.into_iter().max().unwrap_or(0))
}

/// Largest eccentricity.
pub fn diameter(g: &Graph) -> Result<usize, BoundsError> {
    if !g.is_connected() {
        return Err(BoundsError::Disconnected);
    }
    Ok((0..g.n()).map(|s| g.bfs(s).into_iter().max().unwrap_or(0)).max().unwrap_or(0))
}
