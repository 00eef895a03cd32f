//! `hspec families`: closed-form H-spectra of the named families, computed
//! from formulas rather than an eigensolver.

use hspec_core::{closed_form_spectrum, Family};

use crate::config::{OutFormat, OutputArgs};
use crate::error::CliError;
use crate::formats::spectrum_json;
use crate::table::fmt_groups;

pub fn run(family: Family, n: u64, out: &OutputArgs) -> Result<String, CliError> {
    let spec = closed_form_spectrum(family, n as usize)?;
    match out.format {
        OutFormat::Json => Ok(format!("{}\n", spectrum_json(&spec))),
        OutFormat::Table => {
            Ok(format!("{} n={n}: {}\n", family.name(), fmt_groups(spec.groups())))
        }
    }
}
