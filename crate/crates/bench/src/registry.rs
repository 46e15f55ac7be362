//! Check ids the bundled manifest must cover, with what each one asserts.

use crate::manifest::Manifest;

pub const REGISTRY: &[(&str, &str)] = &[
    ("L19", "Ext between small Schur functors: nonzero iff k = 0 and α ≤ β, with Hom dimensions"),
    ("L18", "Ext(Σ^α(k), Σ^{3,1}) vanishes except k[-9] at α = (2,1), k = 5"),
    ("C17", "Ext(Σ^{3,1}(k), Σ^α) vanishes except k[-3] at α = (2,1), k = 1"),
    ("Lall31", "Hom(Σ^α, Σ^{3,1}) dimensions 594, 280, 36, 63, 8 and no higher Ext"),
    ("L31U", "Σ^{3,1}U^∨ is exceptional"),
    ("L31-3", "Ext(Σ^{3,1}(3), Σ^{3,1}) = 0"),
    ("L32", "Ext(S², Σ^{3,2}(-3)) = k[-4] and four left-orthogonal objects"),
    ("LT1ort", "Σ^{3,3}(-4), Σ^{2,2}(-3), Σ^{3,2}(-3) right-orthogonal to O, U^∨, Λ², Σ^{2,1}"),
    ("L21m1", "Σ^{2,2}(-3) ⊗ S right-orthogonal to Σ^{2,1}(-1)"),
    ("LT1", "[T] from mutation agrees with its associated graded"),
    ("LT2", "[T'] agrees with its cohomology sheaves"),
    ("Eqtt", "[T] + [T'] = [G] and [T'] from the second bicomplex"),
    ("L9i", "[T] = -[L_𝔈 Σ^{3,1}] agrees with the first bicomplex"),
    ("LtfMut", "[F] is the right mutation of [T] through Σ^{2,1}(-1)"),
    ("PropT", "mutating T through 𝔈'(-2), 𝔈'(-1) gives T(-2)"),
    ("CorFF", "mutating F through 𝔈(-2), 𝔈(-1) gives F(-2)"),
    ("LDirIm", "pushforward from the partial flag variety on all 128 triples"),
    ("Gram32-1", "first 32-object ordering is unitriangular with det 1"),
    ("Gram32-2", "second 32-object ordering is unitriangular with det 1"),
    ("Gram32-3", "third 32-object ordering is unitriangular with det 1"),
    ("Gram32-4", "fourth 32-object ordering is unitriangular with det 1"),
    ("Gram30", "30-object rectangular part is unitriangular"),
    ("Gram24", "24-object collection on IGr(2,8) is unitriangular"),
    ("Gram24p", "rotated 24-object collection on IGr(2,8) is unitriangular"),
    ("K0Rank", "K_0 rank 32 from Weyl group orders"),
    ("Ranks", "rank T = 25, rank F = 17, rank T' = 3"),
    ("Prop2", "Σ^{2,2} lies in the span of 𝔈(1), 𝔈(2)"),
    ("Prop10", "Σ^{3,3} lies in the span of 𝔈(1), …, 𝔈(4)"),
    ("Cor4", "Σ^{3,1}(k) and Σ^{3,2}(k) lie in the expected spans"),
    ("Residual", "the residual class and [F] are completely orthogonal"),
    ("Staircase29", "staircase complex ending in S² has zero class"),
    ("Staircase34", "staircase complex ending in Σ^{3,1} has zero class"),
    ("StaircaseSC", "staircase complex ending in Σ^{3,2} has zero class"),
    ("Koszul2", "Koszul complex for Λ²U^⊥ has zero class"),
    ("Koszul3", "Koszul complex for Λ³U^⊥ has zero class"),
    ("Koszul4", "Koszul complex for Λ⁴U^⊥ has zero class"),
    ("SerreSuite", "Serre duality on every pair of named bundles"),
    ("SerreRandom", "Serre duality on seeded random pairs"),
    ("LRConservation", "Littlewood-Richardson dimension conservation on seeded pairs"),
    ("WeylLength", "type C root-count length equals BFS word length"),
    ("DegeneracyCriterion", "the pigeonhole vanishing criterion implies degeneracy"),
];

/// Registered ids with no check in `manifest`.
pub fn coverage_gaps(manifest: &Manifest) -> Vec<&'static str> {
    let ids = manifest.ids();
    REGISTRY
        .iter()
        .map(|(id, _)| *id)
        .filter(|id| !ids.contains(id))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn registry_ids_are_unique() {
        let ids: HashSet<_> = REGISTRY.iter().map(|(id, _)| id).collect();
        assert_eq!(ids.len(), REGISTRY.len());
    }

    #[test]
    fn bundled_manifest_covers_the_registry() {
        assert_eq!(coverage_gaps(&Manifest::bundled()), Vec::<&str>::new());
    }

    #[test]
    fn empty_manifest_covers_nothing() {
        assert_eq!(coverage_gaps(&Manifest::default()).len(), REGISTRY.len());
    }
}
