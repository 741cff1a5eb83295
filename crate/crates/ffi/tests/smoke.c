#include <stdio.h>
#include "acwb.h"

int main(void) {
    AcwbPresentation *p = NULL;
    AcwbOutcome *o = NULL;
    if (acwb_presentation_family(0, &p) != ACWB_STATUS_OK) return 2;
    if (acwb_search(p, 15, 20, 1, &o) != ACWB_STATUS_OK) return 3;
    if (acwb_outcome_status(o) != ACWB_SEARCH_STATUS_FOUND) return 4;
    printf("found depth %lld\n", (long long)acwb_outcome_depth(o));
    acwb_outcome_free(o);
    acwb_presentation_free(p);

    AcwbMatrix *e = acwb_matrix_empty(), *h = NULL;
    int64_t det = 0;
    acwb_matrix_add_hopf_pair(e, &h);
    acwb_matrix_det(h, &det);
    printf("det %lld\n", (long long)det);
    acwb_matrix_free(h);
    acwb_matrix_free(e);
    return 0;
}
