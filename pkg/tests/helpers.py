"""Shared builders for pipeline/report tests.

These construct PassResult / DatasetDescription values directly from
zone counts, so effectiveness and reporting logic can be exercised on
fixed inputs (e.g. reference breakdown shapes) without running the
scoring stack.
"""

from movedesc.features import (ACCELERATION, CURVATURE, GEOMETRIC, INDENTATION,
                               KINEMATIC, SPEED)
from movedesc.pipeline import (DatasetDescription, PassRecord, PassResult,
                               Zone, build_breakdown)

# representative score pairs, one per zone
ZONE_SCORES = {
    Zone.COMMON: (0.2, 0.2),
    Zone.UNCOMMON_Y: (0.2, 0.8),
    Zone.UNCOMMON_X: (0.8, 0.2),
    Zone.HYBRID: (0.8, 0.8),
}


def make_pass(x_node, y_node, zones_by_id, all_ids=None, threshold=0.5):
    """PassResult with the given id -> Zone|None assignment.

    ``all_ids`` (default: the keys of ``zones_by_id``) fixes corpus order;
    ids without a zone get common-looking scores but no classification.
    """
    all_ids = list(all_ids if all_ids is not None else zones_by_id)
    records = []
    classified = []
    for traj_id in all_ids:
        zone = zones_by_id.get(traj_id)
        xs, ys = ZONE_SCORES[zone if zone is not None else Zone.COMMON]
        records.append(PassRecord(traj_id, xs, ys, zone))
        if zone is not None:
            classified.append(traj_id)
    return PassResult(x_node, y_node, threshold, 1.0, 1.0,
                      tuple(records), tuple(classified))


def description_from_counts(common, pure_kinematic, pure_geometric, hybrid,
                            kin_inner=None, geo_inner=None):
    """DatasetDescription for an outer breakdown plus two inner breakdowns.

    ``kin_inner`` is (pure_speed, pure_acceleration, hybrid, common_within)
    over the pure-kinematic ids; ``geo_inner`` likewise
    (pure_curvature, pure_indentation, hybrid, common_within). Inner
    counts must sum to their parent count; by default nothing refines.
    """
    if kin_inner is None:
        kin_inner = (0, 0, 0, pure_kinematic)
    if geo_inner is None:
        geo_inner = (0, 0, 0, pure_geometric)
    assert sum(kin_inner) == pure_kinematic
    assert sum(geo_inner) == pure_geometric
    ids = [f"d{i:04d}" for i in range(common + pure_kinematic + pure_geometric + hybrid)]
    zones1 = {}
    cursor = 0
    for zone, count in ((Zone.COMMON, common), (Zone.UNCOMMON_X, pure_kinematic),
                        (Zone.UNCOMMON_Y, pure_geometric), (Zone.HYBRID, hybrid)):
        for _ in range(count):
            zones1[ids[cursor]] = zone
            cursor += 1
    pass1 = make_pass(KINEMATIC, GEOMETRIC, zones1, ids)

    kin_ids = pass1.ids_in_zone(Zone.UNCOMMON_X)
    geo_ids = pass1.ids_in_zone(Zone.UNCOMMON_Y)

    def inner(member_ids, counts):
        pure_x, pure_y, hyb, common_within = counts
        zones = {}
        cursor = 0
        for zone, count in ((Zone.UNCOMMON_X, pure_x), (Zone.UNCOMMON_Y, pure_y),
                            (Zone.HYBRID, hyb), (Zone.COMMON, common_within)):
            for _ in range(count):
                zones[member_ids[cursor]] = zone
                cursor += 1
        return zones

    pass2_kin = make_pass(SPEED, ACCELERATION, inner(kin_ids, kin_inner), ids)
    pass2_geo = make_pass(CURVATURE, INDENTATION, inner(geo_ids, geo_inner), ids)
    breakdown = build_breakdown(pass1, pass2_geo, pass2_kin, KINEMATIC, GEOMETRIC)
    return DatasetDescription(tuple(ids), pass1, pass2_geo, pass2_kin, breakdown)
