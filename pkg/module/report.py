import json
from dataclasses import fields

from .verify import VerificationReport


INT_FIELDS = ('ell', 'v3_min_disc', 'actual_a5')
INT_TUPLE_FIELDS = ('checked_odd_bad_primes', 'tate_residues_at_3', 'reducibility_exception_set')



def _encode(value):
    """Integers become decimal strings; booleans and None pass through."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (tuple, list, frozenset, set)):
        return [_encode(v) for v in value]
    raise TypeError(f"cannot serialize {value!r}")



def report_to_dict(report):
    return {f.name: _encode(getattr(report, f.name)) for f in fields(report)}



def report_from_dict(data):
    expected = {f.name for f in fields(VerificationReport)}
    if set(data) != expected:
        raise ValueError(f"report keys differ from the schema: {sorted(set(data) ^ expected)}")

    values = dict(data)
    for name in INT_FIELDS:
        values[name] = int(values[name])
    for name in INT_TUPLE_FIELDS:
        values[name] = tuple(int(v) for v in values[name])
    return VerificationReport(**values)



def report_to_json(report):
    return json.dumps(report_to_dict(report), separators=(',', ':'))


def report_from_json(line):
    return report_from_dict(json.loads(line))



def bound_to_dict(bound):
    return {
        'p': str(bound.p),
        'degree': str(bound.degree),
        'bound': str(bound.bound),
        'witness': [str(c) for c in bound.witness.coefficients],
        'witness_poly': str(bound.witness),
        'product': str(bound.product),
    }



def _markdown_cell(value):
    if value is None:
        return 'n/a'
    if isinstance(value, list):
        return '{' + ', '.join(value) + '}' if value else '{}'
    return str(value)



class ReportWriter:
    """Writes dict rows to a stream as JSON lines or as a single markdown table."""

    def __init__(self, stream, output_format, columns=None):
        self.stream = stream
        self.output_format = output_format
        self.columns = columns
        self.rows = 0


    def write(self, row):
        if self.output_format == 'json-lines':
            self.stream.write(json.dumps(row, separators=(',', ':')) + '\n')
        else:
            columns = self.columns or list(row)
            if not self.rows:
                self.stream.write('| ' + ' | '.join(columns) + ' |\n')
                self.stream.write('|' + '|'.join(' :---: ' for _ in columns) + '|\n')
            self.stream.write('| ' + ' | '.join(_markdown_cell(row.get(c)) for c in columns) + ' |\n')
        self.rows += 1
        self.stream.flush()
