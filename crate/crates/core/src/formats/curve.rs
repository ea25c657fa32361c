//! Sweep output: CSV table and a small standalone SVG chart.

use std::fmt::Write as _;

use crate::ratio::format_big;
use crate::sweep::{to_f64, SweepCurve};

pub const CSV_HEADER: &str = "ratio,k_r_mean,k_r_std,k_u_mean,k_u_std,trials";

/// One row per grid point. With `exact`, two extra columns carry the means
/// as `p/q`.
pub fn write_csv(curve: &SweepCurve, exact: bool) -> String {
    let mut out = String::from(CSV_HEADER);
    if exact {
        out.push_str(",k_r_mean_exact,k_u_mean_exact");
    }
    out.push('\n');
    for i in 0..curve.len() {
        write!(
            out,
            "{:.6},{:.6},{:.6},{:.6},{:.6},{}",
            curve.ratios[i],
            to_f64(&curve.k_r_mean[i]),
            curve.k_r_std[i],
            to_f64(&curve.k_u_mean[i]),
            curve.k_u_std[i],
            curve.trials
        )
        .unwrap();
        if exact {
            write!(
                out,
                ",{},{}",
                format_big(&curve.k_r_mean[i]),
                format_big(&curve.k_u_mean[i])
            )
            .unwrap();
        }
        out.push('\n');
    }
    out
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 50.0;

fn polyline(curve: &SweepCurve, values: &[num_rational::BigRational]) -> String {
    let pw = WIDTH - 2.0 * MARGIN;
    let ph = HEIGHT - 2.0 * MARGIN;
    curve
        .ratios
        .iter()
        .zip(values)
        .map(|(&x, y)| {
            format!(
                "{:.2},{:.2}",
                MARGIN + x * pw,
                HEIGHT - MARGIN - to_f64(y) * ph
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// `K_r` as a solid blue line, `K_u` dashed red, against `r_s / d`.
pub fn write_svg(curve: &SweepCurve) -> String {
    let mut s = String::new();
    let (x0, y0) = (MARGIN, HEIGHT - MARGIN);
    let (x1, y1) = (WIDTH - MARGIN, MARGIN);
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(
        s,
        r#"<path d="M{x0},{y1} L{x0},{y0} L{x1},{y0}" fill="none" stroke="black"/>"#
    )
    .unwrap();
    for i in 0..=10 {
        let t = i as f64 / 10.0;
        let x = x0 + t * (x1 - x0);
        let y = y0 - t * (y0 - y1);
        writeln!(
            s,
            r#"<text x="{x:.1}" y="{:.1}" font-size="10" text-anchor="middle">{t:.1}</text>"#,
            y0 + 14.0
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" font-size="10" text-anchor="end">{t:.1}</text>"#,
            x0 - 6.0,
            y + 3.0
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" font-size="12" text-anchor="middle">r_s / d</text>"#,
        WIDTH / 2.0,
        HEIGHT - 12.0
    )
    .unwrap();
    writeln!(
        s,
        r#"<polyline points="{}" fill="none" stroke="blue" stroke-width="2"/>"#,
        polyline(curve, &curve.k_r_mean)
    )
    .unwrap();
    writeln!(
        s,
        r#"<polyline points="{}" fill="none" stroke="red" stroke-width="2" stroke-dasharray="6,4"/>"#,
        polyline(curve, &curve.k_u_mean)
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" font-size="12" fill="blue">K_r</text>"#,
        x1 - 60.0,
        y1 + 150.0
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" font-size="12" fill="red">K_u</text>"#,
        x1 - 60.0,
        y1 + 166.0
    )
    .unwrap();
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometric::sample_deployment;
    use crate::sweep::{sweep_single, unit_grid};

    #[test]
    fn csv_shape() {
        let dep = sample_deployment(8, 30.0, 3).unwrap();
        let curve = sweep_single(&dep, &unit_grid(0.25).unwrap()).unwrap();
        let csv = write_csv(&curve, false);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], CSV_HEADER);
        assert!(lines[1].starts_with("0.000000,0.000000,0.000000,0.000000,0.000000,1"));
        assert!(lines[5].starts_with("1.000000,"));

        let exact = write_csv(&curve, true);
        assert!(exact
            .lines()
            .next()
            .unwrap()
            .ends_with(",k_r_mean_exact,k_u_mean_exact"));
        assert!(exact.lines().nth(1).unwrap().ends_with(",0/1,0/1"));
    }

    #[test]
    fn svg_has_two_series() {
        let dep = sample_deployment(8, 30.0, 3).unwrap();
        let curve = sweep_single(&dep, &unit_grid(0.1).unwrap()).unwrap();
        let svg = write_svg(&curve);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
