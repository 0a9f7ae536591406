from ._hlc import (
    Diagram,
    braid_closure,
    free_hom_classes,
    irreducibility,
    order1_sum,
    plane_graph_counts,
    read_diagrams,
    verify_report,
)

__all__ = [
    "Diagram",
    "braid_closure",
    "free_hom_classes",
    "irreducibility",
    "order1_sum",
    "plane_graph_counts",
    "read_diagrams",
    "verify_report",
]
