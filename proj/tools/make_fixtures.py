#!/usr/bin/env python3
"""Writes the small end-to-end fixture set under fixtures/.

The output is checked in; rerun only when the fixture design changes.
"""
import json
import os
import sys

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")


def write(rel, text):
    path = os.path.join(ROOT, rel)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def record(rid, url, ts, html, dialogs=(), scripts=(), final_url=None, popups=0, unload=False, audio=False,
           vantage="residential", status=200):
    final_url = final_url or url
    chain = [url, final_url] if final_url != url else []
    return {
        "record_id": rid,
        "seed_url": url,
        "final_url": final_url,
        "vantage": vantage,
        "observed_at": ts,
        "http_status": status,
        "redirect_chain": chain,
        "html": html,
        "scripts": list(scripts),
        "dialogs": [{"kind": k, "message": m, "ordinal": i + 1} for i, (k, m) in enumerate(dialogs)],
        "onunload_hooked": unload,
        "audio_autoplay": audio,
        "popup_window_count": popups,
    }


def scam_page(phone):
    return ("<html><head><title>Security Alert</title></head><body>"
            "<h1>Windows has been blocked</h1>"
            "<p>Your computer is infected with a virus. Call Microsoft support immediately at "
            + phone + ".</p><audio src=\"beep.mp3\" autoplay loop></audio></body></html>")


def scam_dialogs(phone, padded=False):
    msg = "VIRUS ALERT: your PC is infected with spyware. Call the toll-free helpline " + phone + " now."
    if padded:
        msg = msg + "\n" * 300 + " " * 300
    return [("alert", msg), ("confirm", "Do not ignore this security warning. Close this window?")]


CALLPIXELS = """(function () {
  var config = {
    campaign_key: '43019bb72cd5ecc4e3b33902645dd4d6',
    default_number: '(877) 292-3084',
    default_number_plain: '8772923084'
  };
  Callpixels.Campaign(config).request_number(function (number) {
    document.getElementById('phone').textContent = number.formatted;
  });
})();"""

BENIGN_HTML = ("<html><body><h1>Daily news</h1><p>Weather is sunny. Our office hours are 9 to 5."
               "</p></body></html>")


def corpus():
    recs = []
    n = 0

    def add(*args, **kwargs):
        nonlocal n
        n += 1
        recs.append(record("fx-%03d" % n, *args, **kwargs))

    # Campaign around (877) 292-3084 and (888) 555-0142.
    add("http://windows-alert-2231.xyz/warning/index.html?id=7", "2026-03-01T10:00:00Z",
        scam_page("(877) 292-3084"), scam_dialogs("1-877-292-3084"), unload=True, audio=True)
    add("http://support.pc-security-help.com/alert/", "2026-03-02T11:30:00Z",
        scam_page("888.555.0142"), scam_dialogs("(877) 292-3084", padded=True), popups=2)
    add("http://pc-security-help.com/", "2026-03-05T09:15:00Z",
        scam_page("888-555-0142"), scam_dialogs("888-555-0142"))
    add("http://x9qzkvtrwp.cdn77.net/scan/", "2026-03-12T14:00:00Z",
        scam_page("(888) 555-0142"), scam_dialogs("(888) 555-0142"))
    # A seed that redirects through an ad network into the campaign.
    add("http://parked-typo.com/", "2026-03-12T15:00:00Z",
        scam_page("(877) 292-3084"), scam_dialogs("(877) 292-3084"),
        final_url="http://windows-alert-2231.xyz/warning/index.html")

    # Second campaign.
    add("http://microsoft-error-code.online/0x80070422/", "2026-03-03T08:00:00Z",
        scam_page("(844) 555-0199"), scam_dialogs("(844) 555-0199"), vantage="cloud")
    add("http://err0r-fix.club/fix", "2026-03-15T20:00:00Z",
        scam_page("844-555-0199"), scam_dialogs("844-555-0199"), vantage="university")

    # Pay-per-call page: the number only appears through tracking code.
    add("http://virus-scan-alert.top/", "2026-03-06T12:00:00Z",
        "<html><body><h1>Trojan detected</h1><p>Malware found. Call <span id=\"phone\"></span></p></body></html>",
        [("alert", "Windows security: trojan and spyware detected. Call now.")], scripts=[CALLPIXELS])

    # A lone scam.
    add("http://techsupport-247.info/", "2026-03-08T07:45:00Z",
        scam_page("(833) 555-0177"), scam_dialogs("(833) 555-0177"), popups=1)

    # Benign pages, two with dialogs.
    add("http://example-news.com/", "2026-03-01T09:00:00Z", BENIGN_HTML)
    add("http://shop.example.org/cart", "2026-03-04T16:00:00Z",
        "<html><body><p>Your cart has 2 items. Questions? Phone (212) 555-0100.</p></body></html>",
        [("confirm", "Leave this page? Items in your cart will be kept.")])
    add("http://antivirus-review.example.net/", "2026-03-07T10:00:00Z",
        "<html><body><h1>Best antivirus 2026</h1><p>We tested how each product handles a virus, "
        "trojan and spyware sample. Windows Defender blocked all malware.</p></body></html>")
    add("http://forms.example.com/signup", "2026-03-09T13:00:00Z",
        "<html><body><form>Email</form></body></html>",
        [("alert", "Please enter a valid email address.")])
    return recs


def replay():
    # Responses for the liveness probes on 2026-03-20. Anything not listed
    # fails to load and counts as dead.
    day = []
    day.append(record("rp-001", "http://windows-alert-2231.xyz/warning/index.html", "2026-03-20T06:00:00Z",
                      scam_page("(877) 292-3084"), scam_dialogs("(877) 292-3084")))
    day.append(record("rp-002", "http://pc-security-help.com/", "2026-03-20T06:01:00Z",
                      scam_page("888-555-0142"), scam_dialogs("888-555-0142")))
    day.append(record("rp-003", "http://microsoft-error-code.online/0x80070422/", "2026-03-20T06:02:00Z",
                      "<html><body>This domain is parked.</body></html>"))
    day.append(record("rp-004", "http://err0r-fix.club/", "2026-03-20T06:03:00Z",
                      scam_page("844-555-0199"), scam_dialogs("844-555-0199")))
    return day


def jsonl(rows):
    return "".join(json.dumps(r, ensure_ascii=False, sort_keys=True) + "\n" for r in rows)


STATUS_HEAD = """<!DOCTYPE HTML PUBLIC "-//W3C//DTD HTML 3.2 Final//EN">
<html><head>
<title>Apache Status</title>
</head><body>
<h1>Apache Server Status for {host} (via 127.0.0.1)</h1>

<dl><dt>Server Version: Apache/2.4.18 (Ubuntu)</dt>
<dt>Server MPM: prefork</dt>
<dt>Server Built: 2017-09-18T15:09:02
</dt></dl><hr /><dl>
<dt>Current Time: {now}</dt>
<dt>Restart Time: Monday, 02-Mar-2026 06:25:11 UTC</dt>
<dt>Parent Server Config. Generation: 1</dt>
<dt>Parent Server MPM Generation: 0</dt>
<dt>Server uptime:  {uptime}</dt>
<dt>Server load: 0.00 0.01 0.05</dt>
<dt>Total accesses: {accesses} - Total Traffic: 1.2 GB</dt>
<dt>CPU Usage: u3.5 s1.2 cu0 cs0 - .0012% CPU load</dt>
<dt>{workers} requests currently being processed, 5 idle workers</dt>
</dl><pre>W_W__...........................................................
</pre>
<p>Scoreboard Key:<br />
"<b><code>_</code></b>" Waiting for Connection,
"<b><code>W</code></b>" Sending Reply</p>


<table border="0"><tr><th>Srv</th><th>PID</th><th>Acc</th><th>M</th><th>CPU
</th><th>SS</th><th>Req</th><th>Conn</th><th>Child</th><th>Slot</th><th>Client</th><th>Protocol</th><th>VHost</th><th>Request</th></tr>

"""

STATUS_ROW = """<tr><td><b>{srv}-0</b></td><td>{pid}</td><td>0/{acc}/{acc}</td><td>{mode}
</td><td>0.01</td><td>3</td><td>0</td><td>0.0</td><td>0.02</td><td>0.02
</td><td>{client}</td><td nowrap>http/1.1</td><td nowrap>{host}:80</td><td nowrap>GET {path} HTTP/1.1</td></tr>

"""

STATUS_TAIL = """</table>
 <hr /> <table>
 <tr><th>Srv</th><td>Child Server number - generation</td></tr>
 <tr><th>PID</th><td>OS process ID</td></tr>
 <tr><th>Client</th><td>Client address</td></tr>
 <tr><th>Request</th><td>Request in flight</td></tr>
 </table>
<hr>
<address>Apache/2.4.18 (Ubuntu) Server at {host} Port 80</address>
</body></html>
"""


def status_page(host, now, uptime, accesses, clients):
    out = STATUS_HEAD.format(host=host, now=now, uptime=uptime, accesses=accesses, workers=len(clients))
    for i, client in enumerate(clients):
        out += STATUS_ROW.format(srv=i, pid=2100 + i, acc=3 + i, mode="W" if i % 2 == 0 else "_",
                                 client=client, host=host, path="/warning/index.html" if i % 2 == 0 else "/")
    return out + STATUS_TAIL.format(host=host)


def modstatus():
    write("modstatus/windows-alert-2231.xyz/2026-03-10T12:00:00Z.html",
          status_page("windows-alert-2231.xyz", "Tuesday, 10-Mar-2026 12:00:00 UTC",
                      "8 days 5 hours 34 minutes 49 seconds", 51234,
                      ["203.0.113.5", "198.51.100.23", "203.0.113.5", "2001:db8::17", "192.0.2.44"]))
    write("modstatus/windows-alert-2231.xyz/2026-03-10T12:01:00Z.html",
          status_page("windows-alert-2231.xyz", "Tuesday, 10-Mar-2026 12:01:00 UTC",
                      "8 days 5 hours 35 minutes 49 seconds", 51290,
                      ["198.51.100.23", "203.0.113.77"]))
    write("modstatus/windows-alert-2231.xyz/2026-03-11T08:00:00Z.html",
          status_page("windows-alert-2231.xyz", "Wednesday, 11-Mar-2026 08:00:00 UTC",
                      "9 days 1 hour 34 minutes 49 seconds", 60112,
                      ["203.0.113.90", "192.0.2.44"]))
    # 2026-03-13T00:00:00Z as Unix seconds.
    write("modstatus/err0r-fix.club/1773360000.html",
          status_page("err0r-fix.club", "Friday, 13-Mar-2026 00:00:00 UTC", "2 hours 10 minutes", 812,
                      ["203.0.113.5", "100.64.0.9"]))
    write("modstatus/err0r-fix.club/2026-03-14T00:00:00Z.html",
          "Total Accesses: 1200\nTotal kBytes: 3100\nUptime: 86400\nServerUptimeSeconds: 86400\n"
          "BusyWorkers: 1\nIdleWorkers: 7\nScoreboard: W_______\n")


def main():
    write("corpus.jsonl", jsonl(corpus()))
    write("replay/2026-03-20.jsonl", jsonl(replay()))
    modstatus()
    write("maps/domain_ip.csv", "domain,ip\n"
          "windows-alert-2231.xyz,104.18.32.7\n"
          "support.pc-security-help.com,104.18.33.9\n"
          "pc-security-help.com,104.18.33.9\n"
          "x9qzkvtrwp.cdn77.net,185.59.220.4\n"
          "microsoft-error-code.online,162.255.119.40\n"
          "err0r-fix.club,162.255.119.41\n"
          "virus-scan-alert.top,45.33.12.8\n"
          "techsupport-247.info,45.33.12.9\n")
    write("maps/ip_as.csv", "ip,as_name\n"
          "104.18.32.7,CLOUDFLARENET\n"
          "104.18.33.9,CLOUDFLARENET\n"
          "185.59.220.4,CDN77\n"
          "162.255.119.40,NAMECHEAP-NET\n"
          "162.255.119.41,NAMECHEAP-NET\n"
          "45.33.12.8,LINODE-AP\n"
          "45.33.12.9,LINODE-AP\n")
    write("maps/ip_country.csv", "ip,country_code\n"
          "104.18.32.7,us\n"
          "104.18.33.9,US\n"
          "185.59.220.4,GB\n"
          "162.255.119.40,US\n"
          "162.255.119.41,US\n"
          "45.33.12.8,IN\n"
          "45.33.12.9,IN\n"
          "203.0.113.5,US\n"
          "198.51.100.23,AU\n"
          "192.0.2.44,US\n"
          "203.0.113.77,CA\n")
    write("maps/whois.csv", "domain,email\n"
          "pc-security-help.com,amitabb8@gmx.com\n"
          "windows-alert-2231.xyz,amitabb9@gmx.com\n"
          "microsoft-error-code.online,amitapp1@gmx.com\n"
          "err0r-fix.club,amitabb6@gmail.com\n"
          "virus-scan-alert.top,3f9a1c7e2b@domainsbyproxy.com\n"
          "techsupport-247.info,\n"
          "example-news.com,webmaster@example-news.com\n")
    write("blacklists/domain_feed.csv", "entry,type,date_added\n"
          "windows-alert-2231.xyz,domain,2026-03-20\n"
          "microsoft-error-code.online,domain,2026-02-28\n"
          "unrelated-malware.biz,domain,2026-01-02\n")
    write("blacklists/url_scanner.csv", "entry,type,date_added,hits\n"
          "pc-security-help.com,domain,2026-04-12,3\n"
          "104.18.32.7,ip,2026-03-25,1\n"
          "(877) 292-3084,phone,2026-04-08,2\n")
    write("directories/caller_notes.txt", "// community reports\n8772923084\n8445550199\n")
    write("directories/number_lookup.txt", "8772923084\n8885550142\n8005550100\n")
    write("calls.txt", "// minutes on the line before the first remote-access request\n"
          "12\n17\n9\n25\n31\n14\n8\n22\n19\n13\n")
    write("pipeline.json", json.dumps({
        "corpus": "corpus.jsonl",
        "ip_map": "maps/domain_ip.csv",
        "as_map": "maps/ip_as.csv",
        "geo_map": "maps/ip_country.csv",
        "whois_emails": "maps/whois.csv",
        "blacklists": ["blacklists/domain_feed.csv", "blacklists/url_scanner.csv"],
        "directories": ["directories/caller_notes.txt", "directories/number_lookup.txt"],
        "modstatus_dir": "modstatus",
        "call_durations": "calls.txt",
        "replay_dir": "replay",
        "date": "2026-03-20",
        "out": "out",
        "parallelism": 1,
    }, indent=2) + "\n")


if __name__ == "__main__":
    sys.exit(main())
