use lerch_core::types::real;
use lerch_core::ComplexValue;

const MAX_GRID_POINTS: usize = 100_000;

/// Parsed `--x-grid` value. A newtype so clap keeps it as one argument.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid(pub Vec<ComplexValue>);

fn parse_real(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("'{s}' is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("'{s}' is not finite"))
    }
}

/// "re" or "re,im".
pub fn parse_complex(s: &str) -> Result<ComplexValue, String> {
    match s.split_once(',') {
        None => parse_real(s).map(real),
        Some((re, im)) => Ok(ComplexValue::new(parse_real(re)?, parse_real(im)?)),
    }
}

/// "a:b:step" (inclusive of `b` up to rounding) or "p1;p2;…" with each entry
/// in [`parse_complex`] form.
pub fn parse_grid(s: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let grid = match parts.as_slice() {
        [a, b, step] => {
            let (a, b, step) = (parse_real(a)?, parse_real(b)?, parse_real(step)?);
            if step <= 0.0 || b < a {
                return Err(format!("grid '{s}' needs a <= b and step > 0"));
            }
            let count = ((b - a) / step + 1e-9).floor();
            if count >= MAX_GRID_POINTS as f64 {
                return Err(format!("grid '{s}' has more than {MAX_GRID_POINTS} points"));
            }
            (0..=count as usize)
                .map(|i| real(a + i as f64 * step))
                .collect()
        }
        [_] => s
            .split(';')
            .map(|p| parse_complex(p.trim()))
            .collect::<Result<Vec<_>, _>>()?,
        _ => return Err(format!("grid '{s}' is neither a:b:step nor a ';' list")),
    };
    if grid.len() > MAX_GRID_POINTS {
        return Err(format!("grid '{s}' has more than {MAX_GRID_POINTS} points"));
    }
    Ok(Grid(grid))
}
