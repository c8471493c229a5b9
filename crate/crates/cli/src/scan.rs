//! Parameter-region scanner: classify the underlying algebra at every
//! node of a rectangular (p, q, y) grid and emit CSV.

use nilherm_core::{rat, RegionPoint, Scalar};

/// One grid axis; `steps == 1` pins the axis at `min`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl Axis {
    fn node_approx(&self, k: usize) -> f64 {
        if self.steps <= 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * k as f64 / (self.steps - 1) as f64
        }
    }

    /// Exact node, valid when min/max are exactly representable
    /// integers-over-small-denominators written as f64.
    fn node_exact(&self, k: usize) -> Option<Scalar> {
        let to_rat = |x: f64| {
            // grid endpoints are expected on a 1/1024 lattice
            let scaled = x * 1024.0;
            if scaled.fract() != 0.0 || scaled.abs() > 1e15 {
                None
            } else {
                Some(rat(scaled as i64, 1024))
            }
        };
        let lo = to_rat(self.min)?;
        if self.steps <= 1 {
            return Some(Scalar::exact_re(lo));
        }
        let hi = to_rat(self.max)?;
        let t = rat(k as i64, (self.steps - 1) as i64);
        Some(Scalar::exact_re(&lo + (&hi - &lo) * t))
    }
}

fn fmt_node(s: &Scalar) -> String {
    match s.as_exact_real() {
        Some(r) => r.to_string(),
        None => format!("{}", s.to_complex_f64().0),
    }
}

/// CSV with header `p,q,y,class`, rows in p-major, then q, then y
/// order. With `exact` the nodes are rational and boundary hits
/// (class h4) are decided exactly; otherwise f64 nodes are used.
pub fn scan_region(rho: u8, p: &Axis, q: &Axis, y: &Axis, exact: bool) -> String {
    let mut out = String::from("p,q,y,class\n");
    let node = |axis: &Axis, k: usize| -> Scalar {
        if exact {
            axis.node_exact(k)
                .unwrap_or_else(|| Scalar::approx(axis.node_approx(k), 0.0))
        } else {
            Scalar::approx(axis.node_approx(k), 0.0)
        }
    };
    for i in 0..p.steps.max(1) {
        let pv = node(p, i);
        for j in 0..q.steps.max(1) {
            let qv = node(q, j);
            for k in 0..y.steps.max(1) {
                let yv = node(y, k);
                let pt = RegionPoint::new(rho, pv.clone(), qv.clone(), yv.clone())
                    .expect("grid nodes are real");
                let class = pt.classify();
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    fmt_node(&pv),
                    fmt_node(&qv),
                    fmt_node(&yv),
                    class
                ));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_node_grids() {
        let one = |v: f64| Axis { min: v, max: v, steps: 1 };
        let csv = scan_region(0, &one(0.0), &one(0.0), &one(0.0), true);
        assert_eq!(csv, "p,q,y,class\n0,0,0,h8\n");
        let csv = scan_region(1, &one(1.0), &one(0.0), &one(0.0), true);
        assert!(csv.ends_with("1,0,0,h4\n"));
    }

    #[test]
    fn row_order_is_p_major() {
        let p = Axis { min: 0.0, max: 1.0, steps: 2 };
        let q = Axis { min: 0.0, max: 0.0, steps: 1 };
        let y = Axis { min: 0.0, max: 1.0, steps: 2 };
        let csv = scan_region(1, &p, &q, &y, true);
        let rows: Vec<&str> = csv.lines().collect();
        assert_eq!(rows.len(), 5);
        assert!(rows[1].starts_with("0,0,0,"));
        assert!(rows[2].starts_with("0,0,1,"));
        assert!(rows[3].starts_with("1,0,0,"));
        assert!(rows[4].starts_with("1,0,1,"));
    }

    #[test]
    fn exact_and_approx_agree_off_boundary() {
        let p = Axis { min: -2.0, max: 2.0, steps: 9 };
        let q = Axis { min: 0.0, max: 0.0, steps: 1 };
        let y = Axis { min: -2.0, max: 2.0, steps: 9 };
        let exact = scan_region(1, &p, &q, &y, true);
        let approx = scan_region(1, &p, &q, &y, false);
        let classes = |s: &str| {
            s.lines()
                .skip(1)
                .map(|l| l.rsplit(',').next().unwrap().to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(classes(&exact), classes(&approx));
    }
}
