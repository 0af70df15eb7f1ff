// Lists the ideals of S3 under conjugation, the closure of a single
// transposition, and the quotient by each ideal.
//
// Run with `cargo run --example ideals_and_quotients`.

use std::error::Error;
use std::io::Write;
use std::sync::Arc;

use gwa::algebra::{conjugation_gwa, is_morphism};
use gwa::enumeration::enumerate_ideals;
use gwa::ideals::{ideal_closure, is_ideal, quotient_gwa};
use gwa::{GroupTable, SubsetMask};

fn run(out: &mut dyn Write) -> Result<(), Box<dyn Error>> {
    let s3 = Arc::new(conjugation_gwa(&GroupTable::symmetric(3))?);

    for i in enumerate_ideals(&s3) {
        let q = quotient_gwa(&i)?;
        writeln!(
            out,
            "ideal {:?}: quotient of order {}, cosets {:?}, projection is a morphism: {}",
            i.indices(),
            q.algebra.order(),
            q.cosets,
            is_morphism(&q.projection).ok
        )?;
    }

    let seed = SubsetMask::from_indices(s3.clone(), &[0, 1])?;
    write!(out, "{{0, 1}} as an ideal:\n{}", is_ideal(&seed))?;
    writeln!(out, "generated ideal: {:?}", ideal_closure(&seed).indices())?;
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run(&mut std::io::stdout().lock())
}
