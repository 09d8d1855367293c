#include "sqo.h"

int smoke(void) {
    SqoPlaneGraph *pg = NULL;
    SqoGraph *g = NULL;
    SqoOrdering *o = NULL;
    SqoAudit audit;
    size_t stuck = 0;
    uint32_t labels[289];
    uint32_t span = 0;
    if (sqo_plane_generate("gk", 32, &pg) != SQO_STATUS_OK) return 1;
    if (sqo_plane_graph(pg, &g) != SQO_STATUS_OK) return 2;
    if (sqo_good_ordering(g, 0, 0, &o, &stuck) != SQO_STATUS_OK) return 3;
    if (sqo_greedy_lpq(g, o, 2, 1, labels, sqo_graph_vertex_count(g), &span) != SQO_STATUS_OK) return 4;
    if (sqo_discharge_audit(pg, 0, &audit) != SQO_STATUS_OK || audit.total_num != -8) return 5;
    sqo_ordering_free(o);
    sqo_graph_free(g);
    sqo_plane_free(pg);
    return sqo_last_error() == NULL ? 0 : 6;
}
