//! Text rendering helpers shared by the subcommands.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use gamekit_core::game::{BimatrixGame, Player};

/// Formats a number deterministically: whole values print as integers,
/// everything else with six significant digits.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if (x - x.round()).abs() < 1e-9 && x.abs() < 1e15 {
        return format!("{}", x.round() as i64);
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).clamp(0, 17) as usize;
    format!("{:.*}", decimals, x)
}

/// Reduced fraction text such as `3/5`; whole values drop the denominator.
pub fn fmt_fraction(value: &BigRational) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    if value.denom() == &BigInt::one() {
        return value.numer().to_string();
    }
    format!("{}/{}", value.numer(), value.denom())
}

pub fn rational_to_f64(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        if value.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// `(A,B)` or `(0,1)`: a cell named by the game's strategy labels.
pub fn cell_text(game: &BimatrixGame, cell: (usize, usize)) -> String {
    format!(
        "({},{})",
        game.strategy_name(Player::Row, cell.0),
        game.strategy_name(Player::Col, cell.1)
    )
}

pub fn pair_text(payoffs: (f64, f64)) -> String {
    format!("({},{})", fmt_num(payoffs.0), fmt_num(payoffs.1))
}

/// Right-aligns every column except the left-aligned first one.
pub fn render_table(header: &[String], rows: &[Vec<String>]) -> String {
    let columns = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let mut push_row = |cells: &[String]| {
        for (i, cell) in cells.iter().enumerate() {
            if i == 0 {
                out.push_str(&format!("{:<width$}", cell, width = widths[0]));
            } else {
                out.push_str(&format!("  {:>width$}", cell, width = widths[i]));
            }
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    };
    push_row(header);
    for row in rows {
        debug_assert_eq!(row.len(), columns);
        push_row(row);
    }
    out
}
