import xml.etree.ElementTree as ET
from typing import Sequence, Tuple

Point = Tuple[float, float]


def _num(value: float) -> str:
    # integers print without a trailing ".0" so golden files stay readable
    if float(value).is_integer():
        return str(int(value))
    return f"{value:g}"


# Return an SVG root element whose user coordinates cover the given box.

def svgroot(x: float, y: float, w: float, h: float, scale: int = 40) -> ET.Element:
    return ET.Element("svg", xmlns="http://www.w3.org/2000/svg",
                             version="1.1",
                             width="{}px".format(_num(w * scale)),
                             height="{}px".format(_num(h * scale)),
                             viewBox="{} {} {} {}".format(_num(x), _num(y), _num(w), _num(h)))


def svggroup(parent: ET.Element, **attrs: str) -> ET.Element:
    return ET.SubElement(parent, "g", **attrs)


# Return an SVG polyline element connecting the given points.

def svglinelist(parent: ET.Element, points: Sequence[Point], **attrs: str) -> ET.Element:
    if not points:
        return None
    coords = " ".join("{},{}".format(_num(x), _num(y)) for x, y in points)
    attrs.setdefault("fill", "none")
    attrs.setdefault("stroke", "black")
    attrs.setdefault("stroke-width", "0.06")
    return ET.SubElement(parent, "polyline", points=coords, **attrs)


def svgcircle(parent: ET.Element, center: Point, radius: float, **attrs: str) -> ET.Element:
    attrs.setdefault("fill", "none")
    attrs.setdefault("stroke", "black")
    attrs.setdefault("stroke-width", "0.04")
    return ET.SubElement(parent, "circle", cx=_num(center[0]), cy=_num(center[1]), r=_num(radius), **attrs)


def svgtext(parent: ET.Element, at: Point, text: str, size: float = 0.3) -> ET.Element:
    element = ET.SubElement(parent, "text", x=_num(at[0]), y=_num(at[1]),
                            **{"font-size": _num(size), "text-anchor": "middle",
                               "dominant-baseline": "central"})
    element.text = text
    return element


def svgstring(svg: ET.Element) -> str:
    return ET.tostring(svg, encoding="unicode") + "\n"

