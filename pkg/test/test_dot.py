from bignet import dot


def test_net_to_dot(send_get_net):
    text = dot.net_to_dot(send_get_net)
    assert text.startswith("digraph net {\n")
    assert text.endswith("}\n")
    assert "\tcell3 [" in text
    assert "\\|" in text
    assert "\tcell3:cL -> cell0:dR;" in text
    assert "\tcod:cRL -> cod:cRR [style=dotted];" in text
    assert text.count(" -> ") == 16
    assert dot.net_to_dot(send_get_net) == text


def test_bigraph_to_dot(send_get):
    text = dot.bigraph_to_dot(send_get)
    assert '"site:0" -> "node:g" [arrowhead=empty];' in text
    assert '"node:g" -> "edge:zb" [dir=none, style=bold, taillabel="0"];' in text
    assert '"inner:z" -> "edge:zb" [dir=none];' in text
    assert '"node:s" -> "outer:y"' in text
