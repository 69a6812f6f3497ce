//! Timing table across evaluation methods.

use std::io::Write;
use std::time::Instant;

use nanocone::compute::{compute, Index, Method};
use nanocone::families::{Family, FamilySpec};
use num_bigint::BigInt;

use crate::{CliError, CliResult};

/// The instance benchmarked at `size`: `A_s`, `Z_{s,s}`, `M_{2s,s}`,
/// `Z_{s,s,0}` or `G_s`.
pub fn instance(family: Family, size: u32) -> FamilySpec {
    match family {
        Family::A => FamilySpec::A { n: size },
        Family::Z => FamilySpec::Z { n: size, k: size },
        Family::M => FamilySpec::M { n: 2 * size, k: size },
        Family::ZL => FamilySpec::ZL { n: size, k: size, l: 0 },
        Family::Cone => FamilySpec::Cone { n: size },
    }
}

/// Writes `family,params,vertices,method,seconds,value` rows.
///
/// All rows are written before disagreements are reported, so the table
/// shows which method diverged.
pub fn run(out: &mut impl Write, family: Family, sizes: &[u32], methods: &[Method], index: Index) -> CliResult<()> {
    writeln!(out, "family,params,vertices,method,seconds,value")?;
    let mut mismatches = Vec::new();
    for &size in sizes {
        let spec = instance(family, size);
        let mut first: Option<(Method, BigInt)> = None;
        for &method in methods {
            let start = Instant::now();
            let value = compute(spec, index, method)?;
            let seconds = start.elapsed().as_secs_f64();
            let params: Vec<String> = spec.params().iter().map(i64::to_string).collect();
            writeln!(
                out,
                "{},{},{},{},{seconds:.6},{value}",
                family.name(),
                params.join(" "),
                spec.expected_vertex_count(),
                method.name()
            )?;
            out.flush()?;
            match &first {
                None => first = Some((method, value)),
                Some((m, v)) if *v != value => mismatches.push(format!("{spec}: {m} gives {v}, {method} gives {value}")),
                Some(_) => {}
            }
        }
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(CliError::Core(nanocone::error::Error::Invariant(mismatches.join("; "))))
    }
}
