//! Builds each named form and prints its expansion, then re-checks the
//! identities tying the family together: the hauptmodul times F equals
//! θ⁴, and the two cusp variants differ from it by constant shifts.

use wh4::forms::{hauptmodul, named_form, FormName, PsiVariant};

fn main() {
    for name in FormName::ALL {
        let form = named_form(name, 12);
        println!("{:<8} (weight {:>2}): {}", form.name.as_str(), form.weight, form.series);
    }

    let prec = 18;
    let psi = named_form(FormName::PsiHalf, prec).series;
    let f = named_form(FormName::F, prec).series;
    let th4 = named_form(FormName::Theta4, prec - 2).series;
    assert!(psi.mul(&f).agrees_with(&th4), "psi_half * F must equal theta^4");
    println!("\npsi_half * F == theta^4 on the shared range: ok");

    let half = hauptmodul(PsiVariant::Half, prec);
    let zero = hauptmodul(PsiVariant::Zero, prec);
    let inf = hauptmodul(PsiVariant::Inf, prec);
    assert!(zero.sub(&half).agrees_with(&wh4::QSeries::constant(
        wh4::series::rat_int(-16),
        prec
    )));
    assert!(inf.sub(&half).agrees_with(&wh4::QSeries::constant(
        wh4::series::rat_int(-8),
        prec
    )));
    println!("psi_zero == psi_half - 16 and psi_inf == psi_half - 8: ok");
}
