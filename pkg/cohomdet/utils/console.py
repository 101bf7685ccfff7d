from cohomdet.core.forms import Form, MasseyForm
from cohomdet.core.gluing import GluingInstance
from .log import always_log_info


def summarize(subject):
    """Method to describe a validated form or gluing instance in one short block of text

    Args:
        subject(Form|GluingInstance): the validated input

    Returns:
        (str)
    """
    if isinstance(subject, GluingInstance):
        lines = ["valid gluing instance: case {}, n={}".format(int(subject.case), subject.n),
                 "  f_M: {}".format(_form_line(subject.f_M))]
        if subject.f_Mbar is not None:
            lines.append("  f_Mbar: {}".format(_form_line(subject.f_Mbar)))
        lines.append("  k={}, m={}, tors_M={}, tors_Mbar={}".format(subject.k, subject.m, subject.tors_M,
                                                                  subject.tors_Mbar))
        return "\n".join(lines)
    if isinstance(subject, Form):
        return "valid {}".format(_form_line(subject))
    raise TypeError("Cannot summarize {}".format(type(subject).__name__))


def _form_line(form):
    text = "{} form: n={}".format(form.kind, form.n)
    if isinstance(form, MasseyForm):
        text += ", m={}".format(form.m)
    return "{}, {} nonzero entries, d of degree {}".format(text, len(form.entries()), form.expected_degree)


def print_summary(subject):
    """Method to print the summary and record it in the log

    Args:
        subject(Form|GluingInstance): the validated input

    Returns:
        None
    """
    msg = summarize(subject)
    always_log_info(msg)
    print(msg)
