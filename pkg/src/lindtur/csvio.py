"""CSV output: comment header lines, RFC-4180 rows, lossless float formatting."""
import csv
import io

FLOAT_FMT = ".16e"  # 17 significant digits, round-trips doubles exactly


def format_cell(value):
    if value is None:
        raise ValueError("cells must be pre-filled; None is a silent blank")
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    return format(float(value), FLOAT_FMT)


def render_csv(columns, rows, comments=()):
    """Return the full file content as a string.

    comments become leading '# ' lines; each row is a mapping from column name
    to value (floats formatted to 17 significant digits, strings passed
    through).
    """
    buf = io.StringIO()
    for line in comments:
        buf.write(f"# {line}\r\n")
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_cell(row[col]) for col in columns])
    return buf.getvalue()


def write_csv(path, columns, rows, comments=()):
    content = render_csv(columns, rows, comments)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(content)
