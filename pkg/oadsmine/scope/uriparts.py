"""URI grammar shared by the scope, classifier, ghp and analytics stages."""

# standard modules
import re
import ipaddress
import dataclasses
import urllib.parse

# third party modules
import tldextract

# self-defined modules
from oadsmine.shared.errors import UriParseError


DEFAULT_PORTS = {
    "http": 80,
    "https": 443,
    "ftp": 21,
}

# registered names: letters (including IDN), digits, hyphen, underscore, dot, percent escapes
HOST_NAME_RE = re.compile(r"^[\w.\-~%]+$")

# bundled public suffix snapshot only, never fetched
SUFFIX_EXTRACTOR = tldextract.TLDExtract(cache_dir=None, suffix_list_urls=())


@dataclasses.dataclass(frozen=True)
class UriParts:
    scheme: str
    host: str
    port: int
    path: str
    query: str
    fragment: str
    is_ipv6: bool = False


def parse_uri(uri):
    """split a URI into lowercased scheme/host and the raw remainder; raises UriParseError"""
    try:
        parts = urllib.parse.urlsplit(uri)
        port = parts.port
    except ValueError as exc:
        raise UriParseError(uri, exc)
    if not parts.scheme:
        raise UriParseError(uri, "missing scheme")
    if not parts.netloc or not parts.hostname:
        raise UriParseError(uri, "missing authority")

    host = parts.hostname.rstrip(".")
    is_ipv6 = "[" in parts.netloc
    if is_ipv6:
        try:
            ipaddress.ip_address(host.split("%")[0])
        except ValueError:
            raise UriParseError(uri, "invalid IP literal")
    elif not host or not HOST_NAME_RE.match(host):
        raise UriParseError(uri, "invalid host")
    return UriParts(parts.scheme, host, port, parts.path, parts.query, parts.fragment, is_ipv6)


def host_of(uri):
    """lowercased host as reported in hostname tables; default ports are dropped, www. is kept"""
    parts = parse_uri(uri)
    host = "[{}]".format(parts.host) if parts.is_ipv6 else parts.host
    if parts.port is not None and parts.port != DEFAULT_PORTS.get(parts.scheme):
        host = "{}:{}".format(host, parts.port)
    return host


def host_matches(host, domains):
    """true if host equals one of the domains or is a subdomain of one (whole labels only)"""
    host = host.lower()
    return any(host == domain or host.endswith("." + domain) for domain in domains)


def is_complete_host(host):
    """true for IP addresses and names that end in a known public suffix"""
    try:
        ipaddress.ip_address(host.split("%")[0])
        return True
    except ValueError:
        return bool(SUFFIX_EXTRACTOR(host).suffix)
