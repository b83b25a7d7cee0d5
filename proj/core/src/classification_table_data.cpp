#include "giclass/classify.hpp"

namespace giclass {

// Mirror of data/classification_table.tsv; a test keeps the two in sync.
const char* embedded_classification_table_text() {
    return R"(# Pair classification table.
#
# Columns (tab-separated):
#   pattern1  pattern2  status  provenance
#
# Patterns are graph expressions (see the expression grammar in expr.hpp);
# they match a forbidden pair up to isomorphism, for the pair as given and
# with both sides complemented. "*" matches any graph and may only appear on
# polynomial rows. status is "polynomial:<method>" or "gi-complete".
#
# Classes whose smaller pattern already forces cographs: every member is
# P4-free, so canonical cotrees decide isomorphism.
P4	*	polynomial:cograph	thm:p4-free-canonical
P3	*	polynomial:cograph	thm:p4-free-canonical
K2+K1	*	polynomial:cograph	thm:p4-free-canonical
# Forbidding P3+K1 together with its complement (the paw) leaves a class
# whose modular decomposition has bounded prime quotients.
P3+K1	co(P3+K1)	polynomial:bothsplit	thm:split-pair-decomposition
# The known polynomial island inside the unresolved region.
P4+K1	co(P4+K1)	polynomial:rao	rao:modular-decomposition-preprint
# Hardness carve-outs inside the region: long complemented paths keep the
# class rich enough for a gi-completeness reduction.
P4+K1	co(P6)	gi-complete	reduction:co-p6-co-p7-variants
P4+K1	co(P7)	gi-complete	reduction:co-p6-co-p7-variants
K2+I2	co(P6)	gi-complete	reduction:co-p6-co-p7-variants
K2+I2	co(P7)	gi-complete	reduction:co-p6-co-p7-variants
P3+I2	co(P6)	gi-complete	reduction:co-p6-co-p7-variants
P3+I2	co(P7)	gi-complete	reduction:co-p6-co-p7-variants
)";
}

}  // namespace giclass
