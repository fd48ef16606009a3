import pathlib

import pytest

from prefixcodes import PrefixCode, Source, tree_from_code
from prefixcodes.cli import parse_code_text, parse_source_text

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def load_source(name: str) -> Source:
    return parse_source_text((FIXTURES / name).read_text())


def load_code(name: str) -> PrefixCode:
    return parse_code_text((FIXTURES / name).read_text())


def load_tree(source_name: str, code_name: str):
    source = load_source(source_name)
    return source, tree_from_code(source, load_code(code_name))


@pytest.fixture(scope="session")
def ex1():
    return load_source("ex1.src")


@pytest.fixture(scope="session")
def ex2():
    return load_source("ex2.src")


@pytest.fixture(scope="session")
def ex3():
    return load_source("ex3.src")


@pytest.fixture(scope="session")
def ex4():
    return load_source("ex4.src")


@pytest.fixture(scope="session")
def ex5():
    return load_source("ex5.src")
