use alloc::vec::Vec;

use crate::transform::Transformation;

/// One kernel class `yf⁻¹`, keyed by its image point `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelClass {
    image_point: usize,
    members: Vec<usize>,
}

impl KernelClass {
    pub fn image_point(&self) -> usize {
        self.image_point
    }

    /// The preimage `yf⁻¹`, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// The canonical representative: the least element of the class.
    pub fn representative(&self) -> usize {
        self.members[0]
    }
}

/// The kernel of a transformation: its class partition, a canonical
/// cross-section, and the collapse/defect counts.
///
/// The cross-section takes the least element of each class, which keeps every
/// witness built from it reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelData {
    classes: Vec<KernelClass>,
    cross_section: Vec<usize>,
    collapse: usize,
    defect: usize,
    image: Vec<usize>,
}

impl KernelData {
    /// Classes ascending by image point; the keys are exactly `im(f)`.
    pub fn classes(&self) -> &[KernelClass] {
        &self.classes
    }

    /// The canonical cross-section, sorted ascending.
    pub fn cross_section(&self) -> &[usize] {
        &self.cross_section
    }

    /// `c(f) = |X \ T_f|`.
    pub fn collapse(&self) -> usize {
        self.collapse
    }

    /// `d(f) = |X \ im(f)|`.
    pub fn defect(&self) -> usize {
        self.defect
    }

    /// `im(f)`, sorted ascending.
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// The canonical representative of the class over image point `y`.
    pub fn representative(&self, y: usize) -> Option<usize> {
        self.classes
            .binary_search_by_key(&y, KernelClass::image_point)
            .ok()
            .map(|k| self.classes[k].representative())
    }
}

/// Groups the domain of `f` into kernel classes and derives the canonical
/// cross-section, collapse, and defect.
pub fn kernel_data(f: &Transformation) -> KernelData {
    let n = f.degree();
    let mut members: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for x in 0..n {
        members[f.apply(x)].push(x);
    }
    let classes: Vec<KernelClass> = members
        .into_iter()
        .enumerate()
        .filter(|(_, class)| !class.is_empty())
        .map(|(image_point, members)| KernelClass { image_point, members })
        .collect();
    let image: Vec<usize> = classes.iter().map(KernelClass::image_point).collect();
    let mut cross_section: Vec<usize> = classes.iter().map(KernelClass::representative).collect();
    cross_section.sort_unstable();
    // Both counts follow their own definition; they coincide on a finite
    // domain but are kept separate so the definitional tests stay meaningful.
    let collapse = n - cross_section.len();
    let defect = n - image.len();
    KernelData {
        classes,
        cross_section,
        collapse,
        defect,
        image,
    }
}

/// Whether `c(f) = d(f)`. On a finite domain this always holds; the decider
/// keeps the check explicit so the equivalence stays testable.
pub fn is_semi_balanced(f: &Transformation) -> bool {
    let data = kernel_data(f);
    data.collapse() == data.defect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn t(images: &[usize]) -> Transformation {
        Transformation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn identity_kernel_is_discrete() {
        let data = kernel_data(&Transformation::identity(3));
        assert_eq!(data.classes().len(), 3);
        assert_eq!(data.cross_section(), &[0, 1, 2]);
        assert_eq!(data.collapse(), 0);
        assert_eq!(data.defect(), 0);
    }

    #[test]
    fn two_to_one_map() {
        let data = kernel_data(&t(&[0, 0, 1]));
        assert_eq!(data.classes().len(), 2);
        assert_eq!(data.classes()[0].image_point(), 0);
        assert_eq!(data.classes()[0].members(), &[0, 1]);
        assert_eq!(data.classes()[1].image_point(), 1);
        assert_eq!(data.classes()[1].members(), &[2]);
        assert_eq!(data.cross_section(), &[0, 2]);
        assert_eq!(data.collapse(), 1);
        assert_eq!(data.defect(), 1);
        assert_eq!(data.image(), &[0, 1]);
    }

    #[test]
    fn constant_map_collapses_everything() {
        let data = kernel_data(&Transformation::constant(3, 0));
        assert_eq!(data.classes().len(), 1);
        assert_eq!(data.classes()[0].members(), &[0, 1, 2]);
        assert_eq!(data.cross_section(), &[0]);
        assert_eq!(data.collapse(), 2);
        assert_eq!(data.defect(), 2);
    }

    #[test]
    fn representative_lookup() {
        let data = kernel_data(&t(&[2, 2, 0]));
        assert_eq!(data.representative(2), Some(0));
        assert_eq!(data.representative(0), Some(2));
        assert_eq!(data.representative(1), None);
    }

    #[test]
    fn every_small_map_is_semi_balanced() {
        // Exhaustive at n <= 5: collapse and defect agree on finite domains.
        for n in 1..=5 {
            for f in crate::membership::enumerate(&crate::membership::MonoidId::FullT, n).unwrap()
            {
                assert!(is_semi_balanced(&f), "c != d for {f}");
            }
        }
    }
}
