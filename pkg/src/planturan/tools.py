from fractions import Fraction


def as_fraction(value):
    """
    Returns `value` as an exact fraction
    """
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def slack(lhs, rhs):
    """
    Returns rhs - lhs of an inequality lhs <= rhs, exactly
    """
    return as_fraction(rhs) - as_fraction(lhs)


def ratio_le(num1, den1, num2, den2):
    """
    Checks num1/den1 <= num2/den2 by cross-multiplication,
    denominators must be positive
    """
    return num1 * den2 <= num2 * den1


def fraction_str(value):
    """
    Returns a fraction as 'p/q', or 'p' for integers
    """
    value = as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%d/%d' % (value.numerator, value.denominator)
