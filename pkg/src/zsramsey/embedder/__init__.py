from .driver import (
    TwoPhaseOutcome,
    PipelineResult,
    check_hypotheses,
    embed_two_phase,
    host_bound,
    run_pipeline,
    zero_sum_embed,
)
from .mono import (
    Embedding,
    MonoRegion,
    joint_neighborhood_violation,
    mono_embed,
    mono_embed_into,
    mono_region,
    parse_embedding,
)
from .phase_one import (
    EmbeddingTriple,
    PhaseOneStuck,
    PhaseOneSuccess,
    Step3Assignment,
    partial_colorings,
    phase_one,
    step3_search,
    triple_violations,
)
from .phase_two import PhaseTwoRegion, PhaseTwoState, PhaseTwoSuccess, phase_two_attempt
from .regularity import RegularityTable, VertexScan, regularity_analysis, scan_vertex
from .schedule import ProcessSchedule, build_schedule
