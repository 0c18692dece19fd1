from dataclasses import dataclass, field
from typing import Dict, List

from pencil_points.points.finite_field import reduce_mod_p, require_good_prime


@dataclass
class ClassPartition:
    """
    Rational points grouped by their reduction mod p. Keys are FpPoint,
    values keep the input order of the points.
    """

    p: int
    classes: Dict = field(default_factory=dict)

    def __len__(self):
        return len(self.classes)

    @property
    def sizes(self):
        return sorted((len(v) for v in self.classes.values()), reverse=True)

    @property
    def n_points(self):
        return sum(len(v) for v in self.classes.values())

    def same_class_groups(self, min_size=2):
        """Classes with at least min_size members, largest first."""
        groups = [
            (key, members)
            for key, members in sorted(self.classes.items())
            if len(members) >= min_size
        ]
        return sorted(groups, key=lambda item: -len(item[1]))


def partition_classes(c, points, p) -> ClassPartition:
    p = int(p)
    require_good_prime(c, p)
    classes: Dict[object, List] = {}
    for point in points:
        classes.setdefault(reduce_mod_p(point, p), []).append(point)
    return ClassPartition(p, classes)
