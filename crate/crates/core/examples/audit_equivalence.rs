// Scans every action triple of Z2 on Z2 and compares the derived-action
// conditions with the product side, first as "the product is an object"
// and then also requiring the canonical extension to give the triple back.
//
// Run with `cargo run --release --example audit_equivalence`.

use std::error::Error;
use std::io::Write;
use std::sync::Arc;

use gwa::algebra::identity_action_gwa;
use gwa::enumeration::{audit, AuditOptions, ProductTest};
use gwa::semidirect::Mode;
use gwa::GroupTable;

fn run(out: &mut dyn Write) -> Result<(), Box<dyn Error>> {
    let z2 = Arc::new(identity_action_gwa(&GroupTable::cyclic(2))?);
    for mode in [Mode::Gwa, Mode::Reduced] {
        for product_test in [ProductTest::Object, ProductTest::ObjectInducingTriple] {
            let opts = AuditOptions {
                product_test,
                ..AuditOptions::default()
            };
            let s = audit(&z2, &z2, mode, &opts)?;
            writeln!(
                out,
                "{mode:?} / {product_test:?}: agree {}/{}, both hold {}, disagreements {}",
                s.agree,
                s.total,
                s.derived,
                s.disagreements.len()
            )?;
            for d in s.disagreements.iter().take(2) {
                writeln!(
                    out,
                    "  product={} conditions={} {:?}",
                    d.product, d.derived, d.triple
                )?;
            }
        }
    }

    let z3 = Arc::new(identity_action_gwa(&GroupTable::cyclic(3))?);
    let opts = AuditOptions {
        seed: Some(1),
        samples: 20_000,
        ..AuditOptions::default()
    };
    let s = audit(&z3, &z3, Mode::Reduced, &opts)?;
    writeln!(
        out,
        "Z3 on Z3, seeded sample: agree {}/{}",
        s.agree, s.total
    )?;
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run(&mut std::io::stdout().lock())
}
