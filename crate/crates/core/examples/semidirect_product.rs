// Forms Z2 ⋉ Z2 from the self-action of Z2, builds the canonical split
// extension and reads the triple back off it.
//
// Run with `cargo run --example semidirect_product`.

use std::error::Error;
use std::io::Write;
use std::sync::Arc;

use gwa::actions::{naive_self_action, self_action};
use gwa::algebra::{identity_action_gwa, is_reduced};
use gwa::format::{to_json, AlgebraFile, ExtensionFile};
use gwa::semidirect::{
    build_semidirect, canonical_split_extension, extract_derived_actions, validate_candidate, Mode,
};
use gwa::GroupTable;

fn run(out: &mut dyn Write) -> Result<(), Box<dyn Error>> {
    let z2 = Arc::new(identity_action_gwa(&GroupTable::cyclic(2))?);
    let t = self_action(&z2)?;
    let c = build_semidirect(&z2, &z2, &t)?;
    write!(
        out,
        "{} in Gwa: {}",
        c.product.name(),
        validate_candidate(&c, Mode::Gwa)
    )?;
    write!(out, "reduced: {}", is_reduced(&c.product))?;
    write!(out, "{}", to_json(&AlgebraFile::from_algebra(&c.product)))?;

    let x = canonical_split_extension(&c)?;
    write!(out, "{}", to_json(&ExtensionFile::from_extension(&x)))?;
    let back = extract_derived_actions(&x)?;
    writeln!(out, "triple recovered: {}", back.same_tables(&t))?;

    let naive = build_semidirect(&z2, &z2, &naive_self_action(&z2)?)?;
    write!(
        out,
        "product over the naive triple:\n{}",
        validate_candidate(&naive, Mode::Gwa)
    )?;
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run(&mut std::io::stdout().lock())
}
