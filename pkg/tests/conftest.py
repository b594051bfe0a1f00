import pytest

from pointedcat import (
    QuadraticForm,
    category_from_form,
    enumerate_quadratic_forms,
    parse_group,
)

ROSTER = ("Z2", "Z3", "Z4", "Z2xZ2")


@pytest.fixture(scope="session")
def battery_categories():
    """Every quadratic form on the roster, wrapped as a category."""
    out = []
    for literal in ROSTER:
        group = parse_group(literal)
        for i, form in enumerate(enumerate_quadratic_forms(group)):
            out.append(category_from_form(form, label=f"{literal}#{i}"))
    return out


def brute_force_quadratic_forms(group, value_order):
    """Oracle: filter every function q with q(0) = 1 and values of the given order."""
    import itertools

    from pointedcat.cyclotomic import root_of_unity
    from pointedcat.errors import InvalidQuadraticForm

    elems = group.elements()
    forms = []
    for tail in itertools.product(range(value_order), repeat=len(elems) - 1):
        values = (root_of_unity(1, 0),) + tuple(
            root_of_unity(value_order, k) for k in tail
        )
        try:
            forms.append(QuadraticForm(group, values))
        except InvalidQuadraticForm:
            continue
    return forms
