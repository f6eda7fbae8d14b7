import json

import pytest

from rspin.infrastructure.renderers.resolver import RendererResolver
import rspin.infrastructure.renderers.providers.structured
import rspin.infrastructure.renderers.providers.text

DOCUMENT = {
    "command": "degree",
    "lines": ["D = 2/3 (non-integral)"],
    "data": {"r": 3, "degree": "2/3", "integral": False},
}


def test_given_text_spec_when_resolve_called_then_renders_lines():
    render = RendererResolver.resolve({"type": "text"})

    assert render(DOCUMENT) == "D = 2/3 (non-integral)"


def test_given_no_spec_when_resolve_called_then_defaults_to_text():
    render = RendererResolver.resolve(None)

    assert render({"command": "root", "lines": ["a", "b"], "data": {}}) == "a\nb"


def test_given_structured_spec_when_resolve_called_then_renders_sorted_json():
    render = RendererResolver.resolve({"type": "structured"})

    output = render(DOCUMENT)

    assert json.loads(output) == {"command": "degree", "r": 3, "degree": "2/3", "integral": False}
    assert output.index('"command"') < output.index('"degree"') < output.index('"integral"')


def test_given_unknown_type_when_resolve_called_then_raises_value_error():
    with pytest.raises(ValueError, match="Unknown output format: yaml"):
        RendererResolver.resolve({"type": "yaml"})
