//! Parsers for numeric flags.

/// Grid points closer than this fraction of a step to `stop` are excluded.
const STOP_TOLERANCE: f64 = 1e-9;

fn parse_number(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("`{}` is not a number", s.trim()))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{}` is not finite", s.trim()))
    }
}

/// `start:stop:step` (start included, stop excluded) or `a,b,c`.
pub fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    let s = s.trim();
    if s.contains(':') {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, step] = parts[..] else {
            return Err("grid must look like start:stop:step".into());
        };
        let (start, stop, step) = (parse_number(start)?, parse_number(stop)?, parse_number(step)?);
        if step <= 0.0 {
            return Err("grid step must be positive".into());
        }
        let mut out = Vec::new();
        let mut k = 0u32;
        loop {
            let v = start + k as f64 * step;
            if v >= stop - STOP_TOLERANCE * step {
                break;
            }
            // strip the representation error of k·step so 0.1·3 prints as 0.3
            out.push((v * 1e12).round() / 1e12);
            k += 1;
            if k > 1_000_000 {
                return Err("grid has more than 10^6 points".into());
            }
        }
        Ok(out)
    } else if s.is_empty() {
        Err("grid is empty".into())
    } else {
        s.split(',').map(parse_number).collect()
    }
}

pub fn parse_beta(s: &str) -> Result<f64, String> {
    let v = parse_number(s)?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("beta must lie in [0, 1], got {v}"))
    }
}

pub fn parse_beta_list(s: &str) -> Result<Vec<f64>, String> {
    let values = parse_list(s)?;
    for &v in &values {
        if !(0.0..=1.0).contains(&v) {
            return Err(format!("beta must lie in [0, 1], got {v}"));
        }
    }
    Ok(values)
}

pub fn parse_positive(s: &str) -> Result<f64, String> {
    let v = parse_number(s)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("must be positive, got {v}"))
    }
}

/// Comma-separated nonnegative coefficients; an empty string is `F ≡ 0`.
pub fn parse_poly(s: &str) -> Result<Vec<f64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let values: Vec<f64> = s.split(',').map(parse_number).collect::<Result<_, _>>()?;
    if values.iter().any(|&v| v < 0.0) {
        return Err("polynomial coefficients must be nonnegative".into());
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_excludes_stop() {
        assert_eq!(parse_list("0:1:0.25").unwrap(), vec![0.0, 0.25, 0.5, 0.75]);
        let g = parse_list("0:1:0.1").unwrap();
        assert_eq!(g.len(), 10);
        assert_eq!(g[3], 0.3);
        assert_eq!(*g.last().unwrap(), 0.9);
        assert!(parse_list("1:0:0.1").unwrap().is_empty());
    }

    #[test]
    fn malformed_grids() {
        assert!(parse_list("0:1").is_err());
        assert!(parse_list("0:1:0").is_err());
        assert!(parse_list("0:1:-0.1").is_err());
        assert!(parse_list("a,b").is_err());
        assert!(parse_list("").is_err());
        assert!(parse_beta_list("0,1.5").is_err());
        assert_eq!(parse_list("-2, -1,0.5").unwrap(), vec![-2.0, -1.0, 0.5]);
    }

    #[test]
    fn scalars() {
        assert!(parse_beta("1").is_ok());
        assert!(parse_beta("-0.1").is_err());
        assert!(parse_beta("nan").is_err());
        assert!(parse_positive("0").is_err());
        assert_eq!(parse_poly("").unwrap(), Vec::<f64>::new());
        assert_eq!(parse_poly("0.5,0.25").unwrap(), vec![0.5, 0.25]);
        assert!(parse_poly("-1").is_err());
    }
}
