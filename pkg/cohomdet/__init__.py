__version__ = '0.1.0'


def print_version():
    """
    Tells you which version of cohomdet is installed.
    """
    print("cohomdet {}".format(__version__))
