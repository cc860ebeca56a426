#include <stdio.h>
#include <string.h>

#include "chordarc.h"

#define CHECK(cond)                                          \
    do {                                                     \
        if (!(cond)) {                                       \
            fprintf(stderr, "line %d: %s\n", __LINE__, #cond); \
            return 1;                                        \
        }                                                    \
    } while (0)

int main(void) {
    ChordarcDiagram *c5 = NULL;
    CHECK(chordarc_make_c(2, &c5) == CHORDARC_STATUS_OK);

    size_t arc = 0;
    CHECK(chordarc_arc_number(c5, &arc) == CHORDARC_STATUS_OK);
    CHECK(arc == 3);

    size_t g1, g2;
    CHECK(chordarc_find_cutting_pair(c5, &g1, &g2) == CHORDARC_STATUS_NOT_FOUND);

    size_t witness[10], len = 0, n = 0;
    CHECK(chordarc_find_obstruction(c5, witness, 10, &len, &n) == CHORDARC_STATUS_OK);
    CHECK(len == 10 && n == 2);

    bool planar = true;
    CHECK(chordarc_is_planar_realizable(c5, &planar) == CHORDARC_STATUS_OK);
    CHECK(!planar);

    ChordarcDiagram *bad = NULL;
    CHECK(chordarc_diagram_parse("0 0", &bad) == CHORDARC_STATUS_INVALID_INPUT);
    CHECK(bad == NULL);
    CHECK(chordarc_last_error() != NULL && strlen(chordarc_last_error()) > 0);

    chordarc_diagram_free(c5);
    puts("ok");
    return 0;
}
