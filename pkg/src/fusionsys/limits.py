"""Resource caps.

The engine materializes every group element and every subgroup it talks
about, so hard caps keep accidental monsters from eating the machine.  All
caps raise :class:`~fusionsys.errors.CapacityError` when exceeded; nothing is
silently truncated.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    """Caps applied while constructing groups and enumerating subgroups.

    order_cap:     largest group order that will be materialized.
    degree_cap:    largest number of moved points for a permutation domain.
    subgroup_cap:  largest number of subgroups a single lattice walk may emit.
    """

    order_cap: int = 5000
    degree_cap: int = 64
    subgroup_cap: int = 20000

    def scaled(self, *, order_cap: int | None = None,
               degree_cap: int | None = None,
               subgroup_cap: int | None = None) -> "Limits":
        """A copy with some caps replaced."""
        return Limits(
            order_cap=self.order_cap if order_cap is None else order_cap,
            degree_cap=self.degree_cap if degree_cap is None else degree_cap,
            subgroup_cap=self.subgroup_cap if subgroup_cap is None else subgroup_cap,
        )


DEFAULT_LIMITS = Limits()
