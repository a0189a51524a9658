from dataclasses import dataclass

from .automorphism import INFINITE, Automorphism, Frobenius, Identity


@dataclass(frozen=True)
class SkewContext:
    """The pair (L, sigma) that defines D = L((t, sigma))."""

    field: object
    sigma: Automorphism = Identity()

    def __post_init__(self):
        self.sigma.check_field(self.field)

    def order(self):
        if isinstance(self.sigma, Frobenius):
            return self.sigma.order(self.field)
        return self.sigma.order()

    @property
    def infinite_order(self):
        return self.order() == INFINITE

    def __call__(self, value):
        return self.field(value)

    def gen(self):
        return self.field.gen()

    def zero(self):
        return self.field.zero()

    def one(self):
        return self.field.one()

    def is_fixed(self, a):
        a = self.field(a)
        return self.sigma.apply(a) == a

    def describe(self):
        order = self.order()
        return {
            "field": self.field.describe(),
            "sigma": str(self.sigma),
            "sigma_order": "infinite" if order == INFINITE else order,
        }

    def __str__(self):
        return f"{self.field.name}((t, {self.sigma}))"
