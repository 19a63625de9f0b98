#include <stdio.h>
#include <string.h>
#include "tricluster.h"

int main(int argc, char **argv) {
    if (argc != 2) return 10;
    FILE *f = fopen(argv[1], "rb");
    if (!f) return 11;
    static char text[65536];
    size_t n = fread(text, 1, sizeof text - 1, f);
    fclose(f);
    text[n] = '\0';

    TriSurface *s = NULL;
    if (tri_surface_parse(text, &s) != TriStatus_Ok) {
        fprintf(stderr, "%s\n", tri_last_error());
        return 1;
    }
    TriStats stats;
    if (tri_surface_stats(s, &stats) != TriStatus_Ok) return 2;
    printf("rank %u genus %u boundaries %u points %u\n",
           tri_surface_rank(s), stats.genus, stats.boundary_components,
           stats.marked_points);

    TriPoly *p = NULL;
    if (tri_expand(s, "gamma2", &p) != TriStatus_Ok) {
        fprintf(stderr, "%s\n", tri_last_error());
        return 3;
    }
    char *rendered = NULL;
    if (tri_poly_render(p, &rendered) != TriStatus_Ok) return 4;
    printf("expansion %s\n", rendered);
    printf("terms %zu\n", (size_t)tri_poly_term_count(p));

    tri_string_free(rendered);
    tri_poly_free(p);
    tri_surface_free(s);
    return 0;
}
