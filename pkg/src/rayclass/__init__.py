# Ray class group and abelian extension package
from .group import ArtinClass, RayClassGroup, SplitPlaceSpec, full_rayclass_degree, ray_class_group
from .extension import (
    GeometricExtension,
    compositum_constant_degree,
    enumerate_extensions,
    inertia_degree,
    restrict_modulus,
)
from .genus import (
    character_conductors,
    compositum_genus_bound,
    conductor_degree,
    genus,
    genus_from_characters,
    genus_full_rayclass,
    genus_full_rayclass_literal,
)
from .census import split_count_census
