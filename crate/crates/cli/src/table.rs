//! CSV rendering. Floats use 17 significant digits in exponent form so
//! the output is locale independent and reproducible.

use std::fmt::Write;

use hh3_core::biharmonic::BiharmonicReport;

use crate::source::Source;
use crate::Result;

pub const SAMPLE_HEADER: &str = "s,x,y,z,T1,T2,T3";
pub const FRENET_HEADER: &str = "s,k1,k2,eps1,eps2,eps3,N3,B3,res_direct,res_frenet,degenerate";

fn num(out: &mut String, v: f64) {
    // adding zero turns -0 into 0
    write!(out, "{:.16e}", v + 0.0).expect("write to string");
}

fn row(out: &mut String, values: &[f64]) {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        num(out, *v);
    }
}

pub fn sample_rows(src: &Source) -> Result<String> {
    let positions = src.positions()?;
    let mut out = String::from(SAMPLE_HEADER);
    out.push('\n');
    for &s in &src.grid {
        let p = positions.point(s)?;
        let t = src.curve.tangent(s)?;
        row(&mut out, &[s, p[0], p[1], p[2], t.u1(), t.u2(), t.u3()]);
        out.push('\n');
    }
    Ok(out)
}

/// Degenerate points leave the Frenet columns empty and set `degenerate`
/// to 1.
pub fn frenet_rows(report: &BiharmonicReport) -> String {
    let mut out = String::from(FRENET_HEADER);
    out.push('\n');
    for p in &report.points {
        num(&mut out, p.s);
        match (&p.frenet, p.residual_frenet) {
            (Some(f), Some(res_frenet)) => {
                out.push(',');
                row(&mut out, &[f.k1, f.k2]);
                write!(out, ",{},{},{},", f.eps1, f.eps2, f.eps3).expect("write to string");
                row(&mut out, &[f.n3(), f.b3(), p.residual_direct, res_frenet]);
                out.push_str(",0\n");
            }
            _ => {
                out.push_str(",,,,,,,,");
                num(&mut out, p.residual_direct);
                out.push_str(",,1\n");
            }
        }
    }
    out
}
