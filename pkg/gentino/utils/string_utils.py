import gmpy2


def rational_to_str(value):
    """
    Render a rational as "p/q", or "p" when the denominator is 1.

    e.g. mpq(3, 4) -> "3/4", mpq(5) -> "5"

    :param value: (gmpy2.mpq | int) value to render
    :return: (str)
    """
    value = gmpy2.mpq(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text):
    """
    Parse "p/q", "p" or an integer into a reduced rational.

    :param text: (str | int) value to parse
    :return: (gmpy2.mpq)
    """
    if isinstance(text, int):
        return gmpy2.mpq(text)
    text = str(text).strip()
    if not text:
        raise ValueError("empty rational literal")
    if '/' in text:
        num, den = text.split('/', 1)
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return gmpy2.mpq(int(num), int(den))
    return gmpy2.mpq(int(text))


__all__ = ['rational_to_str', 'parse_rational']
