use std::ops::RangeInclusive;

/// Parameter ranges for `verify`, written `n=2..5,e=2..5,k=0..3`.
/// A single value such as `k=1` is a one-element range; omitted keys keep
/// their defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub n: RangeInclusive<i64>,
    pub e: RangeInclusive<i64>,
    pub k: RangeInclusive<i64>,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            n: 2..=5,
            e: 2..=5,
            k: 0..=3,
        }
    }
}

impl Grid {
    pub fn parse(text: &str) -> Result<Grid, String> {
        let mut grid = Grid::default();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("grid entry `{part}` is not of the form key=range"))?;
            let range = parse_range(value).ok_or_else(|| format!("invalid range `{value}` in grid entry `{part}`"))?;
            match key.trim() {
                "n" => grid.n = range,
                "e" => grid.e = range,
                "k" => grid.k = range,
                other => return Err(format!("unknown grid key `{other}`; expected n, e or k")),
            }
        }
        if *grid.n.start() < 2 || *grid.e.start() < 1 || *grid.k.start() < 0 {
            return Err(format!(
                "grid needs n >= 2, e >= 1, k >= 0, got n={:?} e={:?} k={:?}",
                grid.n, grid.e, grid.k
            ));
        }
        Ok(grid)
    }

    /// Every `(n, e, k)` in lexicographic order.
    pub fn points(&self) -> Vec<(usize, i64, usize)> {
        let mut out = Vec::new();
        for n in self.n.clone() {
            for e in self.e.clone() {
                for k in self.k.clone() {
                    out.push((n as usize, e, k as usize));
                }
            }
        }
        out
    }

    pub fn within(&self, limit: &Grid) -> bool {
        let inside = |r: &RangeInclusive<i64>, l: &RangeInclusive<i64>| r.is_empty() || r.end() <= l.end();
        inside(&self.n, &limit.n) && inside(&self.e, &limit.e) && inside(&self.k, &limit.k)
    }
}

fn parse_range(value: &str) -> Option<RangeInclusive<i64>> {
    match value.split_once("..") {
        Some((lo, hi)) => Some(lo.trim().parse().ok()?..=hi.trim().parse().ok()?),
        None => {
            let v = value.trim().parse().ok()?;
            Some(v..=v)
        }
    }
}
